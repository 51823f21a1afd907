#pragma once

#include <stdexcept>
#include <string>

namespace mq {

/// A finite scattered sequence ran out of elements satisfying a query.
class SequenceExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An adaptive loop hit its doubling or degree cap before reaching the
/// requested accuracy.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mq
