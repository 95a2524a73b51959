#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cok {

using element_id = std::string;

// Immutable universe of elements. Ids are stored sorted, so two carriers over
// the same id set index their elements identically; all other types address
// elements through carrier indices.
class carrier {
 public:
  static std::shared_ptr<const carrier> make(std::vector<element_id> ids);

  std::size_t size() const { return ids_.size(); }
  const std::vector<element_id>& ids() const { return ids_; }
  const element_id& id_of(int index) const { return ids_[index]; }

  std::optional<int> find(const element_id& id) const;
  int index_of(const element_id& id) const;  // throws unknown_element

  bool same_ids(const carrier& other) const { return ids_ == other.ids_; }

 private:
  explicit carrier(std::vector<element_id> ids);

  std::vector<element_id> ids_;
  std::unordered_map<element_id, int> index_;
};

using carrier_ref = std::shared_ptr<const carrier>;

}  // namespace cok
