#include "catri/numbers.hpp"

namespace catri {

RowCache& RowCache::global() {
  static RowCache cache;
  return cache;
}

std::size_t RowCache::byte_budget() const {
  std::lock_guard lock(mutex_);
  return budget_;
}

std::size_t RowCache::bytes_in_use() const {
  std::lock_guard lock(mutex_);
  return in_use_;
}

std::size_t RowCache::size() const {
  std::lock_guard lock(mutex_);
  return lru_.size();
}

void RowCache::clear() {
  std::lock_guard lock(mutex_);
  lru_.clear();
  index_.clear();
  in_use_ = 0;
}

void RowCache::set_byte_budget(std::size_t bytes) {
  std::lock_guard lock(mutex_);
  budget_ = bytes;
  evict_locked();
}

void RowCache::evict_locked() {
  // The most recent entry is kept even when it alone exceeds the budget.
  while (in_use_ > budget_ && lru_.size() > 1) {
    const Entry& victim = lru_.back();
    in_use_ -= victim.bytes;
    index_.erase(victim.key);
    lru_.pop_back();
  }
  if (budget_ == 0) {
    lru_.clear();
    index_.clear();
    in_use_ = 0;
  }
}

std::shared_ptr<const TriangleRow> build_triangle_row(Triangle t,
                                                      std::int64_t index);

std::shared_ptr<const TriangleRow> RowCache::get(Triangle t,
                                                 std::int64_t index) {
  Key key{t, index};
  {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second);
      return it->second->row;
    }
  }
  auto row = build_triangle_row(t, index);
  std::lock_guard lock(mutex_);
  if (auto it = index_.find(key); it != index_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    return it->second->row;
  }
  std::size_t bytes = row->byte_size();
  lru_.push_front(Entry{key, row, bytes});
  index_.emplace(key, lru_.begin());
  in_use_ += bytes;
  evict_locked();
  return row;
}

}  // namespace catri
