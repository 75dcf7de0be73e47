#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgp/pgraph.hpp"

namespace pgp {

// Total map from world labels to image symbols. An image symbol inherits the
// kind of the labels that produce it; by default no image may be produced by
// both an action and an observation (kind separation), which keeps the
// bipartite vertex-kind rule intact after preimage lifting. The override
// exists for experiments and is surfaced, not guessed.
struct LabelMap {
  std::map<Label, std::string> mapping;
  bool allow_shared_images = false;

  bool contains(const Label& l) const;
  // Image label; keeps the kind of the source label. Throws UnmappedLabel.
  Label image_of(const Label& l) const;
  std::set<std::string> image_space() const;
  std::set<Label> preimage(const std::string& image) const;
  // Kind of an image symbol, or nullopt when unused or produced by both kinds.
  std::optional<Kind> image_kind(const std::string& image) const;
  std::vector<Label> unmapped(const std::set<Label>& used) const;
  // Images produced by both kinds; must be empty unless allow_shared_images.
  std::vector<std::string> kind_separation_violations() const;
};

// Elementwise image of an execution; length preserving.
Execution image_of_execution(const LabelMap& h, const Execution& s);

// Lift a filter over image symbols back to world labels: same vertices and
// topology, each label replaced by its preimage, matched by image name.
// Edges whose preimage is empty are removed (or raise UnmappedImage when
// strict). Vertex kinds are reassigned from the kinds of the lifted
// out-edge labels where those are homogeneous; vertices with no out-edges
// keep their declared kind.
PGraph preimage_graph(const LabelMap& h, const PGraph& filter, bool strict = false);

}  // namespace pgp
