#ifndef KERNDICT_ERROR_HPP
#define KERNDICT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kerndict {

/// Raised on any precondition or domain violation in the library.
class Error : public std::invalid_argument {
public:
    explicit Error(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline void require(bool condition, const char* message) {
    if (!condition) {
        throw Error(message);
    }
}

inline void require(bool condition, const std::string& message) {
    if (!condition) {
        throw Error(message);
    }
}

}  // namespace detail

}  // namespace kerndict

#endif  // KERNDICT_ERROR_HPP
