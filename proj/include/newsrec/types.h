#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace newsrec
{

using UserId = std::uint32_t;
using NewsId = std::uint32_t;
using Step = std::uint32_t;

enum class Vote : std::int8_t {
    Disapprove = -1,
    Approve = 1,
};

inline int to_int(Vote v)
{
    return static_cast<int>(v);
}

class DuplicateVoteError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

class DuplicateNewsError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace newsrec
