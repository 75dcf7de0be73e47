#include "pgp/labelmap.hpp"

#include <map>

#include "pgp/errors.hpp"

namespace pgp {

bool LabelMap::contains(const Label& l) const { return mapping.contains(l); }

Label LabelMap::image_of(const Label& l) const {
  auto it = mapping.find(l);
  if (it == mapping.end())
    throw UnmappedLabel("no image for " + std::string(kind_name(l.kind)) + " '" + l.name + "'");
  return Label{l.kind, it->second};
}

std::set<std::string> LabelMap::image_space() const {
  std::set<std::string> result;
  for (const auto& [l, image] : mapping) result.insert(image);
  return result;
}

std::set<Label> LabelMap::preimage(const std::string& image) const {
  std::set<Label> result;
  for (const auto& [l, im] : mapping)
    if (im == image) result.insert(l);
  return result;
}

std::optional<Kind> LabelMap::image_kind(const std::string& image) const {
  std::set<Kind> kinds;
  for (const auto& [l, im] : mapping)
    if (im == image) kinds.insert(l.kind);
  if (kinds.size() != 1) return std::nullopt;
  return *kinds.begin();
}

std::vector<Label> LabelMap::unmapped(const std::set<Label>& used) const {
  std::vector<Label> result;
  for (const auto& l : used)
    if (!mapping.contains(l)) result.push_back(l);
  return result;
}

std::vector<std::string> LabelMap::kind_separation_violations() const {
  std::map<std::string, std::set<Kind>> kinds_by_image;
  for (const auto& [l, image] : mapping) kinds_by_image[image].insert(l.kind);
  std::vector<std::string> result;
  for (const auto& [image, kinds] : kinds_by_image)
    if (kinds.size() > 1) result.push_back(image);
  return result;
}

Execution image_of_execution(const LabelMap& h, const Execution& s) {
  Execution result;
  result.reserve(s.size());
  for (const auto& l : s) result.push_back(h.image_of(l));
  return result;
}

PGraph preimage_graph(const LabelMap& h, const PGraph& filter, bool strict) {
  // preimages are matched by image name; the kind component of filter labels
  // is advisory and gets recomputed below
  std::map<std::string, std::set<Label>> preimages;
  for (const auto& [l, image] : h.mapping) preimages[image].insert(l);

  PGraph result;
  for (const auto& [id, kind] : filter.vertices) result.add_vertex(id, kind);
  result.initial = filter.initial;

  for (const auto& [key, labels] : filter.edges) {
    std::set<Label> lifted;
    for (const auto& l : labels) {
      auto it = preimages.find(l.name);
      if (it == preimages.end()) {
        if (strict) throw UnmappedImage("filter label '" + l.name + "' has an empty preimage");
        continue;
      }
      lifted.insert(it->second.begin(), it->second.end());
    }
    if (!lifted.empty()) result.add_edge(key.first, key.second, std::move(lifted));
  }

  // reassign vertex kinds from the lifted out-edge labels where homogeneous
  for (auto& [id, kind] : result.vertices) {
    std::set<Kind> kinds;
    for (const auto& l : result.out_labels(id)) kinds.insert(l.kind);
    if (kinds.size() == 1) kind = *kinds.begin();
  }
  return result;
}

}  // namespace pgp
