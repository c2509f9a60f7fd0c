#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bibu {

/// Raised for malformed input: unknown labels, partial tables, mismatched
/// groupoids. Axiom violations are never reported this way; they go into a
/// ValidationReport.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

/// Ordered list of distinct labels. The list order is the total order used
/// for every canonical choice in the library.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// -1 when absent.
  int find(std::string_view label) const;
  /// Throws StructuralError naming `what` when absent.
  int at(std::string_view label, std::string_view what = "element") const;

  bool operator==(const FinSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int, StringHash, std::equal_to<>> index_;
};

}  // namespace bibu
