#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zipper {

  enum class ErrorKind {
    malformed_word,
    invalid_code,
    malformed_structure,
    composition_domain,
    no_such_row,
    not_invertible,
    unsupported_structure,
    incompatible_elements,
    invalid_table,
    invalid_class,
    invalid_wall,
    parse,
  };

  std::string_view to_string(ErrorKind kind);

  // Every failure raised by the library carries a kind so that callers (the
  // CLI in particular) can map it to a diagnostic without string matching.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace zipper
