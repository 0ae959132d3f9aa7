#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace chibound {

/// Either a value or a typed failure. Failures here are expected outcomes
/// (an out-of-class input, a found obstruction), not programming errors.
template <typename T, typename Failure>
class Result
{
public:
    Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}
    Result(Failure failure) : state_(std::in_place_index<1>, std::move(failure)) {}

    auto ok() const -> bool { return state_.index() == 0; }
    explicit operator bool() const { return ok(); }

    auto value() const & -> const T &
    {
        if (! ok())
            throw std::logic_error("Result holds a failure, not a value");
        return std::get<0>(state_);
    }
    auto value() && -> T
    {
        if (! ok())
            throw std::logic_error("Result holds a failure, not a value");
        return std::get<0>(std::move(state_));
    }

    auto failure() const & -> const Failure &
    {
        if (ok())
            throw std::logic_error("Result holds a value, not a failure");
        return std::get<1>(state_);
    }

    auto operator->() const -> const T * { return &value(); }
    auto operator*() const & -> const T & { return value(); }

private:
    std::variant<T, Failure> state_;
};

}
