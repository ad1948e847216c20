#pragma once

// Frozen reference values for the main sequences, 0 <= n <= 30, cross-checked
// by two independent pipelines (character-based greedy decomposition and the
// Mahler functional-equation / infinite-product expansions).

#include <cstdint>
#include <vector>

namespace fixtures {

inline const std::vector<std::int64_t> b_p2 = {
    1, 1, 1, 3, 3, 9, 9, 29, 29, 99, 99, 351, 351, 1273, 1273, 4679,
    4679, 17341, 17341, 64637, 64637, 242019, 242019, 909789, 909789,
    3432751, 3432751, 12998311, 12998311, 49387289, 49387289};

inline const std::vector<std::int64_t> b_p3 = {
    1, 1, 2, 2, 5, 6, 15, 21, 50, 77, 176, 286, 637, 1066, 2340, 3978,
    8670, 14859, 32301, 55575, 120822, 208221, 453399, 781794, 1706301,
    2942460, 6438551, 11103665, 24357506, 42015664, 92376280};

inline const std::vector<std::int64_t> b_p5 = {
    1, 1, 2, 3, 6, 9, 19, 28, 62, 91, 208, 308, 716, 1079, 2522, 3886,
    9061, 14297, 33098, 53448, 122551, 202181, 458757, 771443, 1732406,
    2962284, 6587959, 11428743, 25193027, 44250404, 96775581};

inline const std::vector<std::int64_t> b_p7 = {
    1, 1, 2, 3, 6, 10, 20, 34, 69, 117, 242, 407, 858, 1431, 3069, 5085,
    11066, 18258, 40205, 66215, 147136, 242420, 542202, 895390, 2011165,
    3334125, 7505955, 12507121, 28174255, 47229893, 106315770};

inline const std::vector<std::int64_t> b_inf = {
    1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924, 1716, 3432, 6435,
    12870, 24310, 48620, 92378, 184756, 352716, 705432, 1352078, 2704156,
    5200300, 10400600, 20058300, 40116600, 77558760, 155117520};

inline const std::vector<std::int64_t> l_p2 = {
    1, 1, 3, 3, 11, 11, 41, 41, 155, 155, 593, 593, 2289, 2289, 8891, 8891,
    34683, 34683, 135697, 135697, 532041, 532041, 2089363, 2089363, 8215553,
    8215553, 32339011, 32339011, 127417011, 127417011, 502458289};

// The final entry 284884666 is the cross-verified value; a printed source of
// this list drops a digit there.
inline const std::vector<std::int64_t> l_p3 = {
    1, 1, 2, 4, 7, 14, 26, 50, 97, 184, 364, 692, 1378, 2641, 5264, 10181,
    20267, 39523, 78524, 154187, 305728, 603614, 1194758, 2368906, 4682134,
    9313411, 18387902, 36663241, 72331456, 144466892, 284884666};

inline const std::vector<std::int64_t> l_p5 = {
    1, 1, 2, 3, 6, 11, 21, 42, 78, 161, 297, 617, 1144, 2366, 4432, 9088,
    17223, 34986, 67049, 135013, 261326, 522271, 1019427, 2024828, 3979781,
    7866186, 15547861, 30614847, 60783158, 119345091, 237790431};

inline const std::vector<std::int64_t> l_p7 = {
    1, 1, 2, 3, 6, 10, 20, 36, 71, 135, 262, 517, 990, 2001, 3796, 7786,
    14690, 30379, 57188, 118712, 223515, 464341, 875955, 1817598, 3439375,
    7119305, 13522875, 27902564, 53222511, 109424657, 209629719};

}  // namespace fixtures
