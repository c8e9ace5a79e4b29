#pragma once

namespace fusion::detail {

inline int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline int isqrt(int n)
{
    if (n <= 0)
        return 0;
    int r = 0;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

}  // namespace fusion::detail
