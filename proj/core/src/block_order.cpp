#include "cok/block_order.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cok/errors.hpp"

namespace cok {

bool structure_report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const structure_check& check) { return check.passed; });
}

namespace {

using block_vec = std::vector<std::shared_ptr<const block_spec>>;

std::shared_ptr<const block_vec> sorted_blocks(std::vector<block_spec> blocks) {
  auto owned = std::make_shared<block_vec>();
  owned->reserve(blocks.size());
  for (auto& block : blocks)
    owned->push_back(std::make_shared<const block_spec>(std::move(block)));
  std::sort(owned->begin(), owned->end(),
            [](const auto& a, const auto& b) { return a->index < b->index; });
  return owned;
}

std::unordered_map<element_id, int> position_map(const block_vec& blocks) {
  std::unordered_map<element_id, int> position;
  for (std::size_t p = 0; p < blocks.size(); ++p)
    for (const auto& member : blocks[p]->members)
      position.emplace(member.id, static_cast<int>(p));
  return position;
}

void validate(const block_vec& blocks) {
  std::set<element_id> seen;
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    const auto& block = *blocks[p];
    if (p > 0 && !(blocks[p - 1]->index < block.index))
      fail(errc::invalid_block_order,
           "block indices repeat at " + format_rational(block.index));
    if (block.members.empty())
      fail(errc::invalid_block_order,
           "block " + format_rational(block.index) + " is empty");
    std::set<std::pair<int, int>> keys;
    for (const auto& member : block.members) {
      if (!seen.insert(member.id).second)
        fail(errc::duplicate_element, "element " + member.id + " appears twice");
      if (!keys.insert({member.tag, member.intra_rank}).second)
        fail(errc::invalid_block_order,
             "block " + format_rational(block.index) + " repeats tag " +
                 std::to_string(member.tag) + ", rank " +
                 std::to_string(member.intra_rank));
    }
  }
}

}  // namespace

block_order::block_order(std::shared_ptr<const block_vec> blocks,
                         std::unordered_map<element_id, int> position)
    : blocks_(std::move(blocks)), position_(std::move(position)) {}

block_order block_order::make(std::vector<block_spec> blocks) {
  auto owned = sorted_blocks(std::move(blocks));
  validate(*owned);
  auto position = position_map(*owned);
  return block_order(std::move(owned), std::move(position));
}

block_order block_order::unchecked(std::vector<block_spec> blocks,
                                   const std::map<element_id, int>& position_override) {
  auto owned = sorted_blocks(std::move(blocks));
  auto position = position_map(*owned);
  for (const auto& [id, pos] : position_override) position[id] = pos;
  return block_order(std::move(owned), std::move(position));
}

std::size_t block_order::element_count() const {
  std::size_t total = 0;
  for (const auto& block : *blocks_) total += block->members.size();
  return total;
}

int block_order::block_position(const element_id& id) const {
  auto found = position_.find(id);
  if (found == position_.end())
    fail(errc::unknown_element, "element " + id + " is not in the block order");
  return found->second;
}

std::vector<rational> block_order::indices() const {
  std::vector<rational> result;
  result.reserve(blocks_->size());
  for (const auto& block : *blocks_) result.push_back(block->index);
  return result;
}

genericity block_order::rel_generic(const element_id& a, const element_id& b) const {
  const int pa = block_position(a);
  const int pb = block_position(b);
  if (pa == pb) return genericity::dependent;
  return pa < pb ? genericity::right_generic : genericity::left_generic;
}

block_order block_order::insert_block_between(const std::optional<rational>& lo,
                                              const std::optional<rational>& hi,
                                              std::vector<block_element> members) const {
  if (members.empty())
    fail(errc::invalid_block_order, "a new block needs at least one element");
  std::set<std::pair<int, int>> keys;
  for (const auto& member : members) {
    if (position_.count(member.id))
      fail(errc::duplicate_element, "element " + member.id + " already placed");
    if (!keys.insert({member.tag, member.intra_rank}).second)
      fail(errc::invalid_block_order, "new block repeats a (tag, rank) pair");
  }

  auto position_of_index = [&](const rational& index) -> int {
    for (std::size_t p = 0; p < blocks_->size(); ++p)
      if ((*blocks_)[p]->index == index) return static_cast<int>(p);
    fail(errc::bad_interval, "index " + format_rational(index) + " is not a block");
  };

  rational where;
  if (lo && hi) {
    position_of_index(*lo);
    position_of_index(*hi);
    if (!(*lo < *hi))
      fail(errc::bad_interval,
           format_rational(*lo) + " is not below " + format_rational(*hi));
    where = (*lo + *hi) / 2;
  } else if (lo) {
    position_of_index(*lo);
    where = *lo + 1;
  } else if (hi) {
    position_of_index(*hi);
    where = *hi - 1;
  } else {
    if (!blocks_->empty())
      fail(errc::bad_interval, "both ends open on a nonempty block order");
    where = rational(0);
  }
  for (const auto& block : *blocks_)
    if (block->index == where)
      fail(errc::bad_interval,
           "index " + format_rational(where) + " is already occupied");

  auto grown = std::make_shared<block_vec>(*blocks_);
  auto inserted = std::make_shared<const block_spec>(
      block_spec{where, std::move(members)});
  grown->insert(std::upper_bound(grown->begin(), grown->end(), inserted,
                                 [](const auto& a, const auto& b) {
                                   return a->index < b->index;
                                 }),
                inserted);
  auto position = position_map(*grown);
  return block_order(std::move(grown), std::move(position));
}

bool block_order::is_morley(std::span<const element_id> sequence) const {
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
    if (block_position(sequence[i]) >= block_position(sequence[i + 1])) return false;
  if (!sequence.empty()) block_position(sequence.back());
  return true;
}

std::vector<element_id> block_order::replace_in_blocks(
    std::span<const element_id> sequence,
    const std::map<std::size_t, element_id>& replacements) const {
  std::vector<element_id> result(sequence.begin(), sequence.end());
  for (const auto& [where, id] : replacements) {
    if (where >= result.size())
      fail(errc::unknown_element,
           "replacement position " + std::to_string(where) + " is past the sequence");
    if (block_position(id) != block_position(result[where]))
      fail(errc::cross_block_replacement,
           id + " is not in the block of " + result[where]);
    result[where] = id;
  }
  return result;
}

lin_order linearize_family(const block_order& order) {
  struct entry {
    int block;
    int tag;
    int intra;
    element_id id;
  };
  std::vector<entry> entries;
  for (std::size_t p = 0; p < order.block_count(); ++p)
    for (const auto& member : order.block_at(static_cast<int>(p)).members)
      entries.push_back({static_cast<int>(p), member.tag, member.intra_rank, member.id});
  std::sort(entries.begin(), entries.end(), [](const entry& a, const entry& b) {
    return std::tie(a.block, a.tag, a.intra, a.id) <
           std::tie(b.block, b.tag, b.intra, b.id);
  });
  std::vector<element_id> ids, ranking;
  for (const auto& e : entries) {
    ids.push_back(e.id);
    ranking.push_back(e.id);
  }
  return lin_order::from_ranking(std::move(ids), std::move(ranking));
}

structure_report verify_block_structure(const block_order& order) {
  structure_report report;
  std::vector<element_id> ids;
  for (std::size_t p = 0; p < order.block_count(); ++p)
    for (const auto& member : order.block_at(static_cast<int>(p)).members)
      ids.push_back(member.id);
  const int count = static_cast<int>(ids.size());
  std::vector<int> pos(count);
  for (int i = 0; i < count; ++i) pos[i] = order.block_position(ids[i]);
  auto rel = [&](int i, int j) {
    if (pos[i] == pos[j]) return genericity::dependent;
    return pos[i] < pos[j] ? genericity::right_generic : genericity::left_generic;
  };

  auto& axioms = report.checks.emplace_back(structure_check{"partial_order", true, {}});
  for (int i = 0; i < count; ++i) {
    if (order.rel_generic(ids[i], ids[i]) != genericity::dependent) {
      axioms.passed = false;
      axioms.violations.push_back(ids[i] + " is not dependent on itself");
    }
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      auto ab = order.rel_generic(ids[i], ids[j]);
      auto ba = rel(j, i);
      if (ab != rel(i, j)) {
        axioms.passed = false;
        axioms.violations.push_back("position table disagrees with rel_generic on (" +
                                    ids[i] + ", " + ids[j] + ")");
      }
      bool converse = (ab == genericity::right_generic && ba == genericity::left_generic) ||
                      (ab == genericity::left_generic && ba == genericity::right_generic) ||
                      (ab == genericity::dependent && ba == genericity::dependent);
      if (!converse) {
        axioms.passed = false;
        axioms.violations.push_back("asymmetry fails on (" + ids[i] + ", " + ids[j] + ")");
      }
    }
  }
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      for (int k = 0; k < count; ++k)
        if (pos[i] < pos[j] && pos[j] < pos[k] && !(pos[i] < pos[k])) {
          axioms.passed = false;
          axioms.violations.push_back("transitivity fails on (" + ids[i] + ", " +
                                      ids[j] + ", " + ids[k] + ")");
        }

  lin_order lin = linearize_family(order);
  std::vector<int> lin_rank(count);
  for (int i = 0; i < count; ++i)
    lin_rank[i] = lin.rank_of_index(lin.universe()->index_of(ids[i]));

  auto& convexity = report.checks.emplace_back(
      structure_check{"dependence_convex", true, {}});
  std::map<int, std::pair<int, int>> spans;  // block position -> rank range
  std::map<int, int> sizes;
  for (int i = 0; i < count; ++i) {
    auto [it, fresh] = spans.emplace(pos[i], std::make_pair(lin_rank[i], lin_rank[i]));
    if (!fresh) {
      it->second.first = std::min(it->second.first, lin_rank[i]);
      it->second.second = std::max(it->second.second, lin_rank[i]);
    }
    ++sizes[pos[i]];
  }
  for (const auto& [block, span] : spans)
    if (span.second - span.first + 1 != sizes[block]) {
      convexity.passed = false;
      convexity.violations.push_back("dependence class of block position " +
                                     std::to_string(block) +
                                     " is not convex in the linearization");
    }

  auto& extension = report.checks.emplace_back(
      structure_check{"linear_extension", true, {}});
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      if (pos[i] < pos[j] && !(lin_rank[i] < lin_rank[j])) {
        extension.passed = false;
        extension.violations.push_back("(" + ids[i] + ", " + ids[j] +
                                       ") is right-generic but not below in the linearization");
      }
    }

  auto& density = report.checks.emplace_back(structure_check{"density", true, {}});
  element_id probe = "__density_probe__";
  while (std::find(ids.begin(), ids.end(), probe) != ids.end()) probe += "_";
  for (std::size_t p = 0; p + 1 < order.block_count(); ++p) {
    const rational lo = order.block_at(static_cast<int>(p)).index;
    const rational hi = order.block_at(static_cast<int>(p + 1)).index;
    try {
      block_order grown = order.insert_block_between(
          lo, hi, {block_element{probe, 0, 0}});
      std::vector<int> grown_pos(count);
      for (int i = 0; i < count; ++i) grown_pos[i] = grown.block_position(ids[i]);
      for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
          const bool before = pos[i] < pos[j], tied = pos[i] == pos[j];
          const bool before_g = grown_pos[i] < grown_pos[j],
                     tied_g = grown_pos[i] == grown_pos[j];
          if (before != before_g || tied != tied_g) {
            density.passed = false;
            density.violations.push_back("insertion between " + format_rational(lo) +
                                         " and " + format_rational(hi) +
                                         " disturbed (" + ids[i] + ", " + ids[j] + ")");
          }
        }
    } catch (const error& e) {
      density.passed = false;
      density.violations.push_back("insertion between " + format_rational(lo) +
                                   " and " + format_rational(hi) + " failed: " +
                                   e.what());
    }
  }
  return report;
}

}  // namespace cok
