// Generated by tools/reference_values.py (mpmath, 50 digits).
// Do not edit by hand; rerun the script to refresh.
#pragma once

namespace refvals {

// log-gamma spot values
inline constexpr double log_gamma_0_001 = 6.907178885383853;  // ln Gamma(0.001)
inline constexpr double log_gamma_0_5 = 0.5723649429247001;  // ln Gamma(0.5)
inline constexpr double log_gamma_1_0 = 0.0;  // ln Gamma(1.0)
inline constexpr double log_gamma_7_3 = 7.147892523022249;  // ln Gamma(7.3)
inline constexpr double log_gamma_22_0 = 45.38013889847691;  // ln Gamma(22.0)
inline constexpr double log_gamma_101_3 = 365.122871424026;  // ln Gamma(101.3)
inline constexpr double log_gamma_170_5 = 704.0044277342047;  // ln Gamma(170.5)
inline constexpr double log_gamma_171_0 = 706.5730622457874;  // ln Gamma(171.0)
inline constexpr double log_gamma_1234_5 = 7550.550901077895;  // ln Gamma(1234.5)

// alternating harmonic partial sum, 1000 terms, exact rational
inline constexpr double alt_harmonic_1000 = 0.6926474305598204;

// sin(pi/2 * y) with exactly reduced arguments
inline constexpr double sin_half_pi_12345_678 = 0.4845042908445579;  // y = double(12345.678)
inline constexpr double sin_half_pi_prod_07_97_02 = 0.7289686274214163;  // y = 0.7*97*(1+0.2) in double

// tail-series terms and partial sums (series assembly checks)
inline constexpr double tail_term_n2_x10_a07_t02 = -0.00037916302043465214;
inline constexpr double tail_sum_x10_a07_t02_n30 = 0.005151440875628047;
inline constexpr double tail_sum_x50_a13_t01_n10 = 3.629625501434048e-05;
inline constexpr double tail_sum_x3_a10_t05_n25 = 0.039094151816253496;
inline constexpr double tail_sum_x5_a03_tm09_n40 = 0.0009127550825257353;
inline constexpr double remainder_x10_a07_n3 = 0.0001320778229992911;

// threshold solutions
inline constexpr double threshold_a07_n30_e1em5 = 0.4795119141030101;
inline constexpr double threshold_a13_n60_e1em5 = 3.158762622219183;
inline constexpr double threshold_a10_n10_e1em3 = 2.001724278167122;
inline constexpr double threshold_explicit_a07_n3_e1em5 = 29.644596729742734;
inline constexpr int optimal_n_a13_e1em5 = 39;
inline constexpr double optimal_x_a13_e1em5 = 3.1092795529478496;

// U-kernel interior samples (log U)
inline constexpr double log_u_phi03_a07_t02 = -1.8982247155221232;
inline constexpr double log_u_phipi4_a15_t00 = -0.5347999967395703;
inline constexpr double log_u_phi12_a15_t01 = -2.0931713415960864;
inline constexpr double log_u_phim025_a06_t04 = -2.2765727041373633;

// integrand peak locations (phi where U = 1/W)
inline constexpr double peak_x2_a07_t03 = 0.9877744009419731;
inline constexpr double peak_x100_a11_t00 = 1.5645571653287251;
inline constexpr double peak_x005_a19_t005 = -0.05229712885140034;

// closed forms
inline constexpr double density_zero_a14_t02 = 0.27591581781804075;
inline constexpr double alpha1_x1_t05 = 0.38423402213117186;
inline constexpr double gauss_x1 = 0.2196956447338612;

// cross-checked densities, lambda = 1
struct DensityRef { double x, alpha, theta, value; };
inline constexpr DensityRef density_table[] = {
    {0.5, 0.5, 0.0, 0.17076240172520624},
    {2.0, 0.5, 0.5, 0.0621673715005365},
    {2.0, 0.5, 0.95, 0.08537201326437406},
    {10000.0, 0.5, 0.25, 2.3308424172391292e-07},
    {1.0, 0.7, 0.2, 0.15047640539743604},
    {2.0, 0.7, 0.3, 0.06839461559878333},
    {300.0, 0.7, 0.15, 1.6829903956089782e-05},
    {5.0, 0.8, 0.5, 0.017097111274718642},
    {1.5, 1.0, 0.5, 0.19941803482941603},
    {100.0, 1.1, 0.0, 2.08052590987028e-05},
    {1.0, 1.3, 0.2, 0.2677020838297568},
    {2.0, 1.3, -0.26923076923076916, 0.05005626755091784},
    {0.3, 1.5, -0.15, 0.2475566146121905},
    {5.0, 1.7, 0.08823529411764708, 0.002645314838495643},
    {10.0, 1.7, 0.0, 0.00050402304750477},
    {0.05, 1.9, 0.05, 0.28267722940884765},
};

}  // namespace refvals
