#pragma once
// Frozen cross-check values, computed independently of this library with
// arbitrary-precision arithmetic. Regenerate with
//   python3 tests/reference/generate_reference_values.py > include/tkern/oracle_values.hpp
// Do not edit by hand.

#include <array>
#include <cstdint>

namespace tkern::oracle {

// I_1(2)/I_0(2), the logarithmic derivative at 0 of the Bessel-form particular
// solution of f'' = e^x f normalized by f(0) = 1.
inline constexpr double h_exp_potential = 0.6977746579640079820068;
inline constexpr double bessel_i0_at_2 = 2.279585302336067267437;
inline constexpr double bessel_i1_at_2 = 1.590636854637329063382;

// omega_n^2 for -u'' + e^x u = omega^2 u, u(0) = u(pi) = 0; indices 1..50.
inline constexpr std::array<double, 50> exp_eigenvalues_1_to_50 = {
    4.896669379967691490475,
    10.04518989325374199461,
    16.01926725049222080522,
    23.26627094002234191116,
    32.26370704580446673596,
    43.22001964053413726352,
    56.18159402284758029668,
    71.15299753705782222128,
    88.13211919154618146615,
    107.1166761382677977132,
    128.1050212733333175098,
    151.0960437455969216323,
    176.0889968094410335447,
    203.0833710386250046028,
    232.0788119848590989923,
    263.0750679601278118951,
    296.0719567374406436748,
    331.0693439831121691439,
    368.0671290231771469911,
    407.0652352673393491547,
    448.0636036450843871049,
    491.0621880265092066563,
    536.0609519748154460904,
    583.0598664078247596389,
    632.0589078901360745874,
    683.0580573694589309585,
    736.0572992302261286341,
    791.0566205768315925046,
    848.0560106850955717017,
    907.0554605783855445588,
    968.0549626970918461181,
    1031.054510638713478340,
    1096.054098951849017298,
    1163.053722971699374121,
    1232.053378687800837712,
    1303.053062636975212501,
    1376.052771816153337940,
    1451.052503610968067014,
    1528.052255736941335803,
    1607.052026190791020166,
    1688.051813209916627964,
    1771.051615238531576789,
    1856.051430899225144400,
    1943.051258968982070779,
    2032.051098358879157214,
    2123.050948096828633894,
    2216.050807312856980018,
    2311.050675226502388163,
    2408.050551135989563500,
    2507.050434408901158949,
};

// Same problem, indices 100, 200, 500, 1000.
inline constexpr std::array<std::pair<int, double>, 4> exp_eigenvalues_large = {{
    {100, 10007.04830999516530021},
    {200, 40007.04777853611221281},
    {500, 250007.0476297024748517},
    {1000, 1000007.047608439633584},
}};

// (z, I_0(z), I_1(z)) samples spanning the series and asymptotic regimes.
inline constexpr std::array<std::array<double, 3>, 10> bessel_i_samples = {{
    {0.10000000000000001, 1.002501562934095601678, 0.05006252604709269489978},
    {1.0000000000000000, 1.266065877752008335598, 0.5651591039924850272077},
    {2.0000000000000000, 2.279585302336067267437, 1.590636854637329063382},
    {5.0000000000000000, 27.23987182360444689454, 24.33564214245052719914},
    {9.6199999999999992, 1964.311383566682226979, 1859.228700206813850003},
    {12.000000000000000, 18948.92534929630886121, 18141.34878163883160143},
    {25.000000000000000, 5774560606.466310315771, 5657865129.878701353104},
    {31.000000000000000, 2089962966491.903795438, 2055972795294.564731222},
    {40.000000000000000, 14894774793419899.92422, 14707396163259352.73882},
    {120.00000000000000, 4.754573471017090861506e+50, 4.734721127388196124632e+50},
}};

// (x, t, K(x,t)) for the closed-form kernel of the potential q == 1 built on cosh.
inline constexpr std::array<std::array<double, 3>, 6> kernel_cosh_samples = {{
    {2.0000000000000000, 1.0000000000000000, 1.068688010304867184065},
    {2.0000000000000000, -1.9900000000000000, 0.002512489496536702203154},
    {1.0000000000000000, 0.99900000000000000, 0.4998748854327326489502},
    {0.50000000000000000, 0.25000000000000000, 0.1919289979506544142927},
    {3.8999999999999999, 3.8500000000000001, 2.032875196785175012883},
    {2.0000000000000000, 0.0, 0.7953184273186645316911},
}};

// (x, t, K(x,t)) for the kernel of q = 1 - 2 sech^2 x, by direct high-precision
// quadrature of its integral representation.
inline constexpr std::array<std::array<double, 3>, 7> kernel_sech_samples = {{
    {0.29999999999999999, 0.10000000000000001, -0.09646131455298246339807},
    {1.0000000000000000, 0.59999999999999998, -0.2538366361876950044176},
    {1.5000000000000000, -0.69999999999999996, -0.1746396886210458488680},
    {2.0000000000000000, 1.3000000000000000, -0.1215812136337271208135},
    {2.0000000000000000, 1.9500000000000000, 0.02518178877772378875666},
    {2.0000000000000000, -1.9900000000000000, -0.002500419894606549807269},
    {4.0000000000000000, 3.0000000000000000, 1.017619985455252478975},
}};

// (k, omega, x, integral of t^k sin(omega t) over [-x, x]) with k odd.
inline constexpr std::array<std::array<double, 4>, 12> sine_moment_samples = {{
    {1, 2.0000000000000000, 1.5000000000000000, 1.555548748930601796958},
    {3, 1.0000000000000000, 3.1415926535897931, 24.31344151752212148940},
    {5, 0.0010000000000000000, 3.1415926535897931, 0.8629398181816700832214},
    {7, 6.0000000000000000, 3.1415926535897931, -894.3425178094974897272},
    {9, 0.40000000000000002, 2.0000000000000000, 135.8700263748979690335},
    {13, 13.500000000000000, 1.0000000000000000, 0.01802160528192314840996},
    {15, 0.50000000000000000, 2.0000000000000000, 6611.259575750010517483},
    {21, 25.000000000000000, 1.0000000000000000, -0.05120378027553815988479},
    {29, 3.0000000000000000, 1.0000000000000000, 0.01565634772169705000602},
    {29, 9.0000000000000000, 1.0000000000000000, 0.04175216956999227837366},
    {29, 30.500000000000000, 1.0000000000000000, -0.04709857709713487198015},
    {29, 200.00000000000000, 3.1415926535897931, -2608877647951.231635485},
}};

// f(x) = I_0(2 e^{x/2})/I_0(2) and its derivative, sampled; columns (x, f, f').
inline constexpr std::array<std::array<double, 3>, 5> exp_family_samples = {{
    {-3.1415926535897931, 0.4578389874664107572643, 0.01936948304335575979443},
    {-1.0000000000000000, 0.6155191935036816257781, 0.1929410428935835064006},
    {0.50000000000000000, 1.520670184814037846752, 1.507783483674800899868},
    {1.0000000000000000, 2.732688107848104438409, 3.738521009468822974659},
    {3.1415926535897931, 862.4758677804371591955, 3926.992982983505156055},
}};

// n-th derivative at 0 of 1 - 2 sech^2 x, n = 0..30 (odd entries vanish);
// exact integers as decimal strings (several exceed 64 bits).
inline constexpr std::array<const char*, 31> q_sech_derivatives = {
    "-1",
    "0",
    "4",
    "0",
    "-32",
    "0",
    "544",
    "0",
    "-15872",
    "0",
    "707584",
    "0",
    "-44736512",
    "0",
    "3807514624",
    "0",
    "-419730685952",
    "0",
    "58177770225664",
    "0",
    "-9902996106248192",
    "0",
    "2030847773013704704",
    "0",
    "-493842960380415967232",
    "0",
    "140503203207887919775744",
    "0",
    "-46238368375619195682947072",
    "0",
    "17427925514250338592341622784",
};

// Euler numbers E_0..E_30 (sech x = sum E_n x^n / n!), decimal strings.
inline constexpr std::array<const char*, 31> sech_taylor_numerators = {
    "1",
    "0",
    "-1",
    "0",
    "5",
    "0",
    "-61",
    "0",
    "1385",
    "0",
    "-50521",
    "0",
    "2702765",
    "0",
    "-199360981",
    "0",
    "19391512145",
    "0",
    "-2404879675441",
    "0",
    "370371188237525",
    "0",
    "-69348874393137901",
    "0",
    "15514534163557086905",
    "0",
    "-4087072509293123892361",
    "0",
    "1252259641403629865468285",
    "0",
    "-441543893249023104553682821",
};

}  // namespace tkern::oracle
