#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hforest {

/// A finite quasiorder (Q, <=_Q): the label alphabet of the calculus.
/// Constructed from labels plus generator pairs; the stored relation is the
/// reflexive-transitive closure. Immutable after construction.
class QOrder {
public:
  QOrder(std::vector<std::string> labels,
         const std::vector<std::pair<std::string, std::string>>& generators);

  /// Loads the JSON document format:
  ///   { "labels": ["a", "b"], "leq": [["a", "b"]] }
  static QOrder from_json_text(std::string_view text);
  static QOrder load_file(const std::string& path);
  std::string to_json_text() const;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_label(std::string_view label) const;
  /// Index of a declared label; throws validation_error otherwise.
  std::size_t index(std::string_view label) const;

  bool leq(std::size_t p, std::size_t r) const { return leq_[p * labels_.size() + r]; }
  bool leq(std::string_view p, std::string_view r) const { return leq(index(p), index(r)); }

  /// Domination order on nonempty label sets: every element of S is <=_Q
  /// some element of R. Throws validation_error on an empty input set.
  bool dominates(std::span<const std::string> S, std::span<const std::string> R) const;

private:
  std::vector<std::string> labels_;
  std::vector<char> leq_;  // row-major closed relation
};

}  // namespace hforest
