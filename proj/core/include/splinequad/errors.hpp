#ifndef SPLINEQUAD_ERRORS_HPP
#define SPLINEQUAD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splinequad {

/// Invalid family parameters (n out of range, unknown class/degree/variant combination).
class InvalidFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The number of sign-change brackets found in the isolation interval differs from
/// the number of roots the family formula promises.
class CountMismatch : public std::runtime_error {
public:
    CountMismatch(int expected, int found)
        : std::runtime_error("root count mismatch: expected " + std::to_string(expected) +
                             ", found " + std::to_string(found)),
          expected_(expected), found_(found)
    {
    }

    int expected() const noexcept { return expected_; }
    int found() const noexcept { return found_; }

private:
    int expected_;
    int found_;
};

class NoSignChange : public std::runtime_error {
public:
    NoSignChange() : std::runtime_error("polynomial does not change sign on the bracket") {}
};

class DegenerateWeight : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EntryCountMismatch : public std::runtime_error {
public:
    EntryCountMismatch(std::size_t generated, std::size_t golden)
        : std::runtime_error("entry count mismatch: generated " + std::to_string(generated) +
                             ", golden " + std::to_string(golden))
    {
    }
};

} // namespace splinequad

#endif // SPLINEQUAD_ERRORS_HPP
