// Copyright 2026 The TrussLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace trusslab {

/// Bucket priority queue over dense ids with integer keys that only decrease.
///
/// Extraction returns the smallest key, ties broken by smallest id. Each
/// bucket holds a min-heap prefix plus an unordered tail of recent arrivals.
/// A decrement only appends to the tail; the tail is filtered for stale
/// entries and merged into the heap when the bucket is next popped. Since
/// keys never increase, a stale entry stays stale, and most are dropped
/// without ever touching a heap.
class BucketQueue {
 public:
  explicit BucketQueue(std::vector<std::size_t> keys)
      : key_(std::move(keys)), removed_(key_.size(), 0), remaining_(key_.size()) {
    std::size_t max_key = 0;
    for (auto k : key_) max_key = std::max(max_key, k);
    buckets_.resize(max_key + 1);
    // Ids are pushed ascending, so each bucket starts as a valid min-heap.
    for (std::size_t id = 0; id < key_.size(); ++id) {
      buckets_[key_[id]].items.push_back(static_cast<std::uint32_t>(id));
    }
    for (auto& b : buckets_) b.heap_size = b.items.size();
    cur_ = 0;
  }

  bool empty() const { return remaining_ == 0; }
  std::size_t size() const { return remaining_; }
  std::size_t key(std::size_t id) const { return key_[id]; }
  bool contains(std::size_t id) const { return !removed_[id]; }

  std::pair<std::size_t, std::size_t> pop_min() {
    assert(!empty());
    for (;; ++cur_) {
      Bucket& b = buckets_[cur_];
      absorb_tail(b);
      while (b.heap_size > 0) {
        std::pop_heap(b.items.begin(), b.items.begin() + b.heap_size, std::greater<>{});
        const std::size_t id = b.items[--b.heap_size];
        b.items.pop_back();
        if (!live_in(id, cur_)) continue;
        removed_[id] = 1;
        --remaining_;
        return {id, cur_};
      }
    }
  }

  void decrement(std::size_t id) {
    assert(!removed_[id] && key_[id] > 0);
    const std::size_t k = --key_[id];
    buckets_[k].items.push_back(static_cast<std::uint32_t>(id));
    if (k < cur_) cur_ = k;
  }

 private:
  struct Bucket {
    std::vector<std::uint32_t> items;  // heap in [0, heap_size), tail after
    std::size_t heap_size = 0;
  };

  bool live_in(std::size_t id, std::size_t k) const { return !removed_[id] && key_[id] == k; }

  void absorb_tail(Bucket& b) {
    const std::size_t k = static_cast<std::size_t>(&b - buckets_.data());
    for (std::size_t i = b.heap_size; i < b.items.size(); ++i) {
      const std::uint32_t id = b.items[i];
      if (!live_in(id, k)) continue;
      b.items[b.heap_size++] = id;
      std::push_heap(b.items.begin(), b.items.begin() + b.heap_size, std::greater<>{});
    }
    b.items.resize(b.heap_size);
  }

  std::vector<std::size_t> key_;
  std::vector<char> removed_;
  std::vector<Bucket> buckets_;  // ids fit in 32 bits
  std::size_t remaining_;
  std::size_t cur_;
};

}  // namespace trusslab
