#include "lnmeans/presets.hpp"

namespace lnmeans {

LogSummary rainfall_seeded() { return LogSummary{26, 5.134, 2.46}; }
LogSummary rainfall_unseeded() { return LogSummary{26, 3.990, 2.60}; }

std::array<double, 3> rainfall_reference() { return {0.0779, 0.0747, 0.0599}; }

namespace {

constexpr ReferenceRow make_row(int n1, int n2, double mu1, double s1sq,
                                double s2sq, double a, double b, double c) {
    return ReferenceRow{Scenario{n1, n2, mu1, 0.0, s1sq, s2sq},
                        {a / 10000.0, b / 10000.0, c / 10000.0}};
}

// 28 equal-true-means cells (mu2 = 0, so mu1 = (s2sq - s1sq) / 2 in every
// row) with reference rejection counts per 10^4 replicates at alpha 0.05.
constexpr ReferenceRow kSizeGrid[] = {
    make_row(4, 4, 1, 2, 4, 421, 436, 1091),
    make_row(4, 4, 0, 3, 3, 344, 405, 367),
    make_row(4, 4, 5, 2, 12, 464, 510, 2168),
    make_row(4, 4, 0, 12, 12, 392, 391, 112),
    make_row(10, 10, 1, 2, 4, 612, 603, 895),
    make_row(10, 10, 0, 3, 3, 546, 581, 432),
    make_row(10, 10, 5, 2, 12, 515, 552, 1433),
    make_row(10, 10, 0, 12, 12, 538, 538, 386),
    make_row(25, 25, 0, 1, 1, 512, 524, 614),
    make_row(25, 25, 0, 5, 5, 521, 522, 516),
    make_row(25, 25, 0, 10, 10, 486, 531, 446),
    make_row(25, 25, 0, 100, 100, 521, 531, 396),
    make_row(25, 25, 2, 4, 8, 538, 520, 828),
    make_row(25, 25, 4, 8, 16, 492, 493, 851),
    make_row(40, 25, 0, 1, 1, 391, 467, 506),
    make_row(40, 25, 0, 5, 5, 412, 425, 491),
    make_row(40, 25, 0, 10, 10, 459, 416, 512),
    make_row(25, 40, 0, 1, 1, 382, 376, 364),
    make_row(25, 40, 0, 5, 5, 394, 373, 244),
    make_row(25, 40, 0, 10, 10, 435, 412, 199),
    make_row(40, 25, 5, 2, 12, 521, 510, 1061),
    make_row(25, 40, 5, 2, 12, 312, 341, 586),
    make_row(40, 40, 8, 4, 20, 536, 492, 932),
    make_row(40, 40, 14, 4, 32, 513, 546, 922),
    make_row(100, 25, 0, 1, 1, 451, 473, 664),
    make_row(100, 25, 0, 5, 5, 374, 379, 714),
    make_row(100, 25, 0, 10, 10, 396, 388, 720),
    make_row(25, 100, 0, 1, 1, 482, 464, 295),
};

// 28 unequal-means cells (mu1 + s1sq/2 > s2sq/2 throughout).
constexpr ReferenceRow kPowerGrid[] = {
    make_row(4, 4, 0, 12, 4, 1523, 1496, 364),
    make_row(4, 4, 3, 2, 4, 1261, 1204, 3832),
    make_row(4, 4, 0, 20, 4, 2610, 2601, 334),
    make_row(4, 4, 4, 1, 1, 5753, 5772, 9621),
    make_row(10, 10, 0, 12, 4, 4136, 4089, 2334),
    make_row(10, 10, 0, 20, 4, 6941, 6903, 4562),
    make_row(10, 10, 3, 2, 4, 2961, 3114, 5173),
    make_row(10, 10, 4, 1, 1, 9931, 9942, 9990),
    make_row(25, 25, 1, 1, 1, 8370, 8345, 8917),
    make_row(25, 25, 1, 5, 5, 1916, 1843, 2081),
    make_row(25, 25, 0, 4, 2, 3564, 3521, 3157),
    make_row(25, 25, 1, 10, 10, 1126, 1123, 1250),
    make_row(25, 25, 0, 9, 7, 1314, 1360, 1225),
    make_row(25, 25, 0, 4, 1, 7411, 7390, 6854),
    make_row(40, 25, 1, 1, 1, 8392, 8324, 9036),
    make_row(40, 25, 1, 5, 5, 2023, 2025, 2736),
    make_row(40, 25, 1, 10, 10, 1173, 1123, 1492),
    make_row(25, 40, 1, 1, 1, 9194, 9135, 9401),
    make_row(25, 40, 1, 5, 5, 2243, 2307, 2159),
    make_row(25, 40, 1, 10, 10, 1120, 1145, 784),
    make_row(40, 25, 1, 5, 4, 8836, 8814, 4649),
    make_row(40, 25, 1, 10, 9, 1831, 1734, 2263),
    make_row(25, 40, 1, 5, 4, 4464, 4482, 4955),
    make_row(25, 40, 1, 10, 9, 1956, 1893, 1493),
    make_row(100, 25, 1, 1, 1, 8834, 8762, 9512),
    make_row(100, 25, 1, 5, 5, 1856, 1932, 3364),
    make_row(100, 25, 1, 10, 10, 942, 913, 1825),
    make_row(25, 100, 1, 1, 1, 9984, 9913, 9893),
};

constexpr int kSizeAnchors[] = {0, 8};
constexpr int kPowerAnchors[] = {7};

}  // namespace

std::span<const ReferenceRow> size_grid() { return kSizeGrid; }
std::span<const ReferenceRow> power_grid() { return kPowerGrid; }
std::span<const int> size_anchor_rows() { return kSizeAnchors; }
std::span<const int> power_anchor_rows() { return kPowerAnchors; }

}  // namespace lnmeans
