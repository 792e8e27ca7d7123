#pragma once

#include <stdexcept>

namespace bclass {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// group-core
struct CapExceeded : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct ElementNotInAmbient : Error { using Error::Error; };
// fusion
struct AmbientMismatch : Error { using Error::Error; };
struct BaseMismatch : Error { using Error::Error; };
// burnside
struct BasisMismatch : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
// repmod
struct FieldMismatch : Error { using Error::Error; };
struct ActionMismatch : Error { using Error::Error; };
struct QMismatch : Error { using Error::Error; };
// classify / cli
struct CatalogInsufficient : Error { using Error::Error; };
struct UnknownGroup : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

}  // namespace bclass
