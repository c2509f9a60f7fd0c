#include "bibucalc/finset.hpp"

namespace bibu {

FinSet::FinSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
    if (!fresh) throw StructuralError("duplicate label '" + labels_[i] + "'");
  }
}

int FinSet::find(std::string_view label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

int FinSet::at(std::string_view label, std::string_view what) const {
  int i = find(label);
  if (i < 0) throw StructuralError("unknown " + std::string(what) + " '" + std::string(label) + "'");
  return i;
}

}  // namespace bibu
