#pragma once

// Scheme files: a YAML document
//
//   ring: {n: 1, m: 1}
//   field: rational          # or {prime: 32003}; omitted means F_32003
//   points:
//     - {x: [1, 0], y: [1, 2/3], mult: 2}

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fatpoints/scheme.hpp"

namespace fatpoints {

class SchemeFileError : public std::runtime_error {
 public:
  /// line is 1-based; 0 when unknown.
  SchemeFileError(const std::string& what, int line);
  int line() const { return line_; }

 private:
  int line_;
};

/// "rational", "prime:p" or a bare prime.
Field parse_field_spec(std::string_view spec);

/// With `field_override`, coordinates are read into that field instead of
/// the one named in the document.
FatPointScheme parse_scheme_text(std::string_view text, const std::optional<Field>& field_override = std::nullopt);
FatPointScheme parse_scheme_file(const std::string& path, const std::optional<Field>& field_override = std::nullopt);

}  // namespace fatpoints
