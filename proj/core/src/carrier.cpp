#include "cok/carrier.hpp"

#include <algorithm>

#include "cok/errors.hpp"

namespace cok {

carrier::carrier(std::vector<element_id> ids) : ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = static_cast<int>(i);
}

std::shared_ptr<const carrier> carrier::make(std::vector<element_id> ids) {
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) fail(errc::duplicate_element, "'" + *dup + "' listed twice");
  return std::shared_ptr<const carrier>(new carrier(std::move(ids)));
}

std::optional<int> carrier::find(const element_id& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int carrier::index_of(const element_id& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail(errc::unknown_element, "'" + id + "' not in carrier");
  return it->second;
}

}  // namespace cok
