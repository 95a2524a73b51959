#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cok/lin_order.hpp"
#include "cok/rational.hpp"

namespace cok {

struct block_element {
  element_id id;
  int tag = 0;         // which element kind the entry realizes
  int intra_rank = 0;  // position among entries of the same tag

  bool operator==(const block_element&) const = default;
};

struct block_spec {
  rational index;
  std::vector<block_element> members;
};

enum class genericity { right_generic, left_generic, dependent };

struct structure_check {
  std::string name;
  bool passed = true;
  std::vector<std::string> violations;
};

struct structure_report {
  std::vector<structure_check> checks;
  bool all_passed() const;
};

// Dense family of dependence blocks indexed by rationals. Two elements are
// dependent exactly when they share a block; across blocks the lower index
// is left-generic, the higher right-generic. Values are persistent: an
// insertion copies the index, not the blocks.
class block_order {
 public:
  static block_order make(std::vector<block_spec> blocks);

  // Skips validation and accepts a block assignment override for selected
  // ids. Only for structure-verification drills on deliberately broken data.
  static block_order unchecked(std::vector<block_spec> blocks,
                               const std::map<element_id, int>& position_override = {});

  std::size_t block_count() const { return blocks_->size(); }
  std::size_t element_count() const;
  const block_spec& block_at(int position) const { return *(*blocks_)[position]; }
  int block_position(const element_id& id) const;  // throws unknown_element
  std::vector<rational> indices() const;

  genericity rel_generic(const element_id& a, const element_id& b) const;

  // New block strictly between lo and hi: at their midpoint, or one past the
  // extreme index when the corresponding side is open. lo and hi must be
  // existing indices; bad_interval on misuse or index collision.
  block_order insert_block_between(const std::optional<rational>& lo,
                                   const std::optional<rational>& hi,
                                   std::vector<block_element> members) const;

  // Strictly increasing block indices along the sequence.
  bool is_morley(std::span<const element_id> sequence) const;

  // Swap selected sequence positions for other elements of the same blocks;
  // cross_block_replacement otherwise.
  std::vector<element_id> replace_in_blocks(
      std::span<const element_id> sequence,
      const std::map<std::size_t, element_id>& replacements) const;

 private:
  block_order(std::shared_ptr<const std::vector<std::shared_ptr<const block_spec>>> blocks,
              std::unordered_map<element_id, int> position);

  std::shared_ptr<const std::vector<std::shared_ptr<const block_spec>>> blocks_;
  std::unordered_map<element_id, int> position_;
};

// Elements ordered by (block index, tag, intra rank). Restricted to one tag
// this is exactly the block-respecting order of that kind's entries.
lin_order linearize_family(const block_order& order);

// Partial-order axioms for right_generic, dependence as a convex
// equivalence of the linearization, the linear-extension law, and
// operational density (an insertion fits between every adjacent index pair
// without disturbing existing relations).
structure_report verify_block_structure(const block_order& order);

}  // namespace cok
