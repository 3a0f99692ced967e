#pragma once

// Frozen reference values, generated by tests/data/generate_fixtures.py
// (mpmath, 50-digit arithmetic, printed to 17 significant digits).
// Do not edit by hand; regenerate instead.

namespace levyball::fixtures {

struct GammaPoint { double x; double gamma; };

inline constexpr GammaPoint kGammaTable[] = {
    {0.025000000000000000, 39.446958525930149},
    {0.050000000000000000, 19.470085311255513},
    {0.075000000000000000, 12.825577585792598},
    {0.10000000000000000, 9.5135076986687318},
    {0.20000000000000000, 4.5908437119988031},
    {0.25000000000000000, 3.6256099082219083},
    {0.30000000000000000, 2.9915689876875906},
    {0.40000000000000000, 2.2181595437576882},
    {0.50000000000000000, 1.7724538509055160},
    {0.60000000000000000, 1.4891922488128171},
    {0.70000000000000000, 1.2980553326475578},
    {0.75000000000000000, 1.2254167024651776},
    {0.80000000000000000, 1.1642297137253034},
    {0.90000000000000000, 1.0686287021193194},
    {0.95000000000000000, 1.0314533171290322},
    {1.0000000000000000, 1.0000000000000000},
    {1.0500000000000000, 0.97350426556277564},
    {1.1000000000000000, 0.95135076986687318},
    {1.2500000000000000, 0.90640247705547708},
    {1.5000000000000000, 0.88622692545275801},
    {1.7500000000000000, 0.91906252684888323},
    {1.9000000000000000, 0.96176583190738742},
    {2.0000000000000000, 1.0000000000000000},
    {2.2500000000000000, 1.1330030963193463},
    {2.5000000000000000, 1.3293403881791370},
    {2.7500000000000000, 1.6083594219855457},
    {2.9750000000000000, 1.9546309287421552},
};

inline constexpr double kKappa_0_5 = 0.90031631615710607;
inline constexpr double kKappa_1_5 = 0.30010543871903536;
inline constexpr double kCAlpha_0_5 = 0.22507907903927652;

struct C1Point { double alpha; double c1; };

inline constexpr C1Point kC1Table[] = {
    {0.3, 7.7105051343098406},
    {0.5, 5.0132565492620010},
    {0.8, 3.5466218138174922},
    {1.0, 3.1415926535897932},
    {1.2, 2.9980563908116560},
    {1.5, 3.3421710328413340},
    {1.8, 6.0640997605404069},
};

// p.v. integral of [exp(-(w)^2)-1]|w|^(-3/2) over R (alpha = 1/2, u = 0)
inline constexpr double kPvGaussAlphaHalf = -4.9016668098607106;
}  // namespace levyball::fixtures
