#pragma once

#include <vector>

namespace tkern::reference {

// Hand-checked values for the validation suites.  Everything here is frozen
// data: the library must reproduce these numbers, not the other way around.

/// Nonzero integer coefficients S through level 6, keyed by
/// (level n, list length ell, first index d, remaining indices).
struct STableEntry {
    int n, ell, d;
    std::vector<int> parts;
    long long value;
};

inline const std::vector<STableEntry>& s_table() {
    static const std::vector<STableEntry> table = {
        {1, 0, 1, {}, 1},
        {2, 0, 2, {}, 1},
        {2, 1, 0, {0}, 1},
        {3, 0, 3, {}, 1},
        {3, 1, 0, {1}, 1},
        {3, 1, 1, {0}, 3},
        {4, 0, 4, {}, 1},
        {4, 1, 0, {2}, 1},
        {4, 1, 1, {1}, 2},
        {4, 1, 2, {0}, 4},
        {4, 2, 0, {0, 0}, 3},
        {5, 0, 5, {}, 1},
        {5, 1, 0, {3}, 1},
        {5, 1, 1, {2}, 5},
        {5, 1, 2, {1}, 5},
        {5, 1, 3, {0}, 5},
        {5, 2, 0, {0, 1}, 6},
        {5, 2, 1, {0, 0}, 10},
        {6, 0, 6, {}, 1},
        {6, 1, 0, {4}, 1},
        {6, 1, 1, {3}, 4},
        {6, 1, 2, {2}, 11},
        {6, 1, 3, {1}, 9},
        {6, 1, 4, {0}, 6},
        {6, 2, 0, {0, 2}, 10},
        {6, 2, 0, {1, 1}, 5},
        {6, 2, 1, {0, 1}, 15},
        {6, 2, 2, {0, 0}, 15},
        {6, 3, 0, {0, 0, 0}, 10},
    };
    return table;
}

/// Expansion coefficients of the kernel for q = 1 - 2 sech(x)^2 at odd
/// orders n: the stored integers are the numerators over 2^(n+1) n!.
struct SechCoefficientRow {
    int n;
    long long c_num;
    long long b_num;
};

inline const std::vector<SechCoefficientRow>& sech_coefficient_rows() {
    static const std::vector<SechCoefficientRow> table = {
        {1, -1, -1},        {3, 3, 1},          {5, -10, -2},      {7, 35, 5},
        {9, -126, -14},     {11, 462, 42},      {13, -1716, -132}, {15, 6435, 429},
        {17, -24310, -1430}, {19, 92378, 4862}, {21, -352716, -16796},
    };
    return table;
}

/// Odd-order derivatives in t at the origin of the kernels attached to
/// f = cosh and f = sech, scaled by 2^(n+1).
struct KernelDerivativeRow {
    int n;
    long long scaled_cosh;
    long long scaled_sech;
};

inline const std::vector<KernelDerivativeRow>& kernel_derivative_rows() {
    static const std::vector<KernelDerivativeRow> table = {
        {1, 1, -1},          {3, -3, 1},          {5, 10, -2},        {7, -35, 5},
        {9, 126, -14},       {11, -462, 42},      {13, 1716, -132},   {15, -6435, 429},
        {17, 24310, -1430},  {19, -92378, 4862},  {21, 352716, -16796},
    };
    return table;
}

/// Even-order derivatives at 0 of q = 1 - 2 sech(x)^2 (odd orders vanish).
struct PotentialDerivativeRow {
    int n;
    long long value;
};

inline const std::vector<PotentialDerivativeRow>& sech_potential_derivative_rows() {
    static const std::vector<PotentialDerivativeRow> table = {
        {0, -1},
        {2, 4},
        {4, -32},
        {6, 544},
        {8, -15872},
        {10, 707584},
        {12, -44736512},
        {14, 3807514624LL},
        {16, -419730685952LL},
        {18, 58177770225664LL},
        {20, -9902996106248192LL},
    };
    return table;
}

/// Largest deviation over the region |t| <= |x| between a closed-form kernel
/// and its degree-N approximation.
struct KernelErrorRow {
    int order;
    double error;
};

struct KernelErrorTable {
    const char* family; ///< "sech" or "cosh"
    double b;
    const char* method; ///< "taylor" or "minimax"
    std::vector<KernelErrorRow> rows;
};

inline const std::vector<KernelErrorTable>& kernel_error_tables() {
    static const std::vector<KernelErrorTable> tables = {
        {"sech", 1.0, "taylor",
         {{1, 0.12833}, {3, 0.021458}, {5, 0.0017866}, {7, 8.9155e-5}, {9, 2.9655e-6},
          {11, 7.0469e-8}, {13, 1.2562e-9}, {15, 7.3683e-11}, {17, 7.3991e-11}, {19, 7.3989e-11}}},
        {"sech", 2.0, "taylor",
         {{5, 0.21204}, {7, 0.043909}, {9, 0.0059553}, {11, 0.00057228}, {13, 4.1076e-5},
          {15, 2.288e-6}, {17, 1.0182e-7}, {19, 3.7047e-9}, {21, 3.3373e-10}, {23, 3.3373e-10}}},
        {"sech", 4.0, "taylor",
         {{13, 1.8261}, {15, 0.39987}, {17, 0.070023}, {19, 0.010037}, {21, 0.0011998},
          {23, 0.00012146}, {25, 1.055e-5}, {27, 7.9493e-7}, {29, 5.2453e-8}, {31, 3.0562e-9}}},
        {"cosh", 2.0, "taylor",
         {{1, 1.7878}, {3, 1.088}, {5, 0.33724}, {7, 0.063779}, {9, 0.0081416},
          {11, 0.00074903}, {13, 5.2024e-5}, {15, 2.8243e-6}, {17, 1.2312e-7}, {19, 4.4042e-9},
          {21, 1.316e-10}, {23, 3.3386e-12}, {25, 7.5051e-14}, {27, 6.9944e-15}, {29, 6.6613e-15}}},
        {"sech", 2.0, "minimax",
         {{5, 0.0045993}, {9, 9.3687e-6}, {13, 4.1549e-9}, {17, 3.3354e-10}}},
        {"sech", 4.0, "minimax",
         {{13, 7.4042e-5}, {17, 2.342e-7}, {21, 2.789e-10}, {25, 4.9467e-11}}},
        {"cosh", 2.0, "minimax",
         {{5, 0.0052907}, {9, 1.2563e-5}, {13, 6.6227e-9}, {17, 1.1813e-12}, {19, 1.0325e-14}}},
    };
    return tables;
}

/// Dirichlet eigenvalues of -y'' + e^x y on [0, pi].  granularity is one
/// unit in the last printed decimal place; abs_err and rel_err are the
/// deviations from independently computed high-precision values.
struct EigenvalueRow {
    int n;
    double lambda;
    double granularity;
    double abs_err;
    double rel_err;
};

inline const std::vector<EigenvalueRow>& eigenvalue_rows() {
    static const std::vector<EigenvalueRow> table = {
        {1, 4.89666937996891, 1e-14, 1.2e-12, 2.5e-13},
        {2, 10.0451898932577, 1e-13, 4.0e-12, 4.0e-13},
        {3, 16.0192672505157, 1e-13, 2.3e-11, 1.5e-12},
        {5, 32.2637070458132, 1e-13, 8.7e-12, 2.7e-13},
        {10, 107.116676138236, 1e-12, 3.2e-11, 3.0e-13},
        {20, 407.065235267218, 1e-12, 1.2e-10, 3.0e-13},
        {50, 2507.05043440902, 1e-11, 1.2e-10, 4.9e-14},
        {100, 10007.0483099952, 1e-10, 2.4e-11, 2.4e-15},
        {200, 40007.0477785361, 1e-10, 3.6e-11, 9.1e-16},
        {500, 250007.047629702, 1e-9, 1.2e-10, 4.7e-16},
        {1000, 1000007.04760844, 1e-8, 2.3e-10, 2.3e-16},
    };
    return table;
}

} // namespace tkern::reference
