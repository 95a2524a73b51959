#include "cok/ordered_fn.hpp"

#include <algorithm>

#include "cok/errors.hpp"

namespace cok {

ordered_fn::ordered_fn(lin_order domain, lin_order codomain, std::vector<int> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {}

ordered_fn ordered_fn::make(lin_order domain, lin_order codomain,
                            const std::vector<std::pair<element_id, element_id>>& map) {
  std::vector<int> image(domain.size(), -1);
  for (const auto& [from, to] : map) {
    int from_idx = domain.universe()->index_of(from);
    int to_idx = codomain.universe()->index_of(to);
    if (image[from_idx] != -1)
      fail(errc::not_a_function, "'" + from + "' mapped twice");
    image[from_idx] = to_idx;
  }
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] == -1)
      fail(errc::not_a_function,
           "'" + domain.universe()->id_of(static_cast<int>(i)) + "' has no image");
  return ordered_fn(std::move(domain), std::move(codomain), std::move(image));
}

ordered_fn ordered_fn::from_indices(lin_order domain, lin_order codomain,
                                    std::vector<int> image_index) {
  if (image_index.size() != domain.size())
    fail(errc::not_a_function, "image array size mismatch");
  for (int idx : image_index)
    if (idx < 0 || idx >= static_cast<int>(codomain.size()))
      fail(errc::not_a_function, "image index out of range");
  return ordered_fn(std::move(domain), std::move(codomain), std::move(image_index));
}

bool ordered_fn::is_constant() const {
  if (image_.empty()) return true;
  return std::all_of(image_.begin(), image_.end(),
                     [&](int idx) { return idx == image_.front(); });
}

convex_partition ordered_fn::kernel() const {
  // Compress codomain indices to dense block ids over the domain.
  std::vector<int> sorted(image_);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> block_of(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    block_of[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), image_[i]) - sorted.begin());
  return convex_partition::from_block_ids(domain_.universe(), std::move(block_of));
}

total_preorder ordered_fn::pullback_preorder() const {
  std::vector<int> levels(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    levels[i] = codomain_.rank_of_index(image_[i]);
  return total_preorder::from_levels(domain_.universe(), std::move(levels));
}

}  // namespace cok
