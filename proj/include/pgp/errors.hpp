#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgp {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A subset vertex produced by determinization mixes action and observation
// vertices. The core operations tolerate such subsets; consumers that need
// kind-homogeneous vertices raise this.
class MixedKindSubset : public Error {
 public:
  using Error::Error;
};

// A label without an image under the label map.
class UnmappedLabel : public Error {
 public:
  using Error::Error;
};

// A filter label that is not produced by the label map, in strict mode.
class UnmappedImage : public Error {
 public:
  using Error::Error;
};

// The skeleton execution handed to plan synthesis is not in the closure
// language.
class SkeletonNotInClosure : public Error {
 public:
  using Error::Error;
};

// Plan enumeration would exceed its configured search budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A stipulation atom that names no world vertex.
class UnknownAtom : public Error {
 public:
  using Error::Error;
};

// Malformed stipulation text; offset is the byte position of the failure.
class FormulaSyntaxError : public Error {
 public:
  FormulaSyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

// Structurally invalid scenario or graph file.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A cross-reference in a scenario file that resolves to nothing.
class DanglingReference : public Error {
 public:
  using Error::Error;
};

// An identifier used as both an action and an observation, or a label map
// that sends both kinds to one image without the explicit override.
class LabelKindClash : public Error {
 public:
  using Error::Error;
};

}  // namespace pgp
