#pragma once

#include <utility>
#include <vector>

#include "cok/convex_partition.hpp"
#include "cok/lin_order.hpp"
#include "cok/preorder.hpp"

namespace cok {

// Total function between two linearly ordered carriers.
class ordered_fn {
 public:
  static ordered_fn make(lin_order domain, lin_order codomain,
                         const std::vector<std::pair<element_id, element_id>>& map);

  // image_index[i] is the codomain carrier index of f(domain index i).
  static ordered_fn from_indices(lin_order domain, lin_order codomain,
                                 std::vector<int> image_index);

  const lin_order& domain() const { return domain_; }
  const lin_order& codomain() const { return codomain_; }
  int image_index(int domain_index) const { return image_[domain_index]; }
  const std::vector<int>& image_indices() const { return image_; }

  bool is_constant() const;

  // Fibers of f.
  convex_partition kernel() const;

  // x precedes-or-ties y iff f(x) <= f(y) in the codomain.
  total_preorder pullback_preorder() const;

 private:
  ordered_fn(lin_order domain, lin_order codomain, std::vector<int> image);

  lin_order domain_;
  lin_order codomain_;
  std::vector<int> image_;
};

}  // namespace cok
