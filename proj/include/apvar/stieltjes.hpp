#pragma once

#include <array>

namespace apvar {

// Stieltjes constants gamma_n, n = 0..15, in
//   zeta(s) = 1/(s-1) + sum_{n>=0} (-1)^n gamma_n (s-1)^n / n!.
inline constexpr std::array<long double, 16> kStieltjes = {
    0.5772156649015328606065121L,     -0.07281584548367672486058638L,
    -0.009690363192872318484530386L,  0.002053834420303345866160047L,
    0.00232537006546730005746817L,    0.0007933238173010627017533349L,
    -0.0002387693454301996098724218L, -0.0005272895670577510460740975L,
    -0.0003521233538030395096020522L, -0.00003439477441808804817791462L,
    0.0002053328149090647946837223L,  0.0002701844395439035266729021L,
    0.0001672729121051401933535015L,  -0.0000274638066037601588600076L,
    -0.0002092092620592999458371397L, -0.0002834686553202414466429345L,
};

inline constexpr double kEulerGamma = static_cast<double>(kStieltjes[0]);

}  // namespace apvar
