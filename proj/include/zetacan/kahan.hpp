#pragma once

namespace zetacan {

// compensated summation
template <typename T>
struct KahanSum {
    T sum{};
    T comp{};

    void add(T x)
    {
        T y = x - comp;
        T t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    KahanSum& operator+=(T x)
    {
        add(x);
        return *this;
    }
    T value() const { return sum; }
};

}  // namespace zetacan
