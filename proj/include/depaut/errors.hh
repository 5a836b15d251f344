#ifndef DEPAUT_ERRORS_HH_
#define DEPAUT_ERRORS_HH_

#include <stdexcept>
#include <string>

namespace depaut {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};

struct SearchCapExceeded : CapExceeded {
    explicit SearchCapExceeded(const std::string& m) : CapExceeded(m) {}
};

struct NotADepMorphism : std::runtime_error {
    explicit NotADepMorphism(const std::string& m) : std::runtime_error(m) {}
};

struct NotACovering : std::runtime_error {
    explicit NotACovering(const std::string& m) : std::runtime_error(m) {}
};

// an internal cross-check against the theory failed; always a bug
struct DefectError : std::logic_error {
    explicit DefectError(const std::string& m) : std::logic_error(m) {}
};

}  // namespace depaut

#endif
