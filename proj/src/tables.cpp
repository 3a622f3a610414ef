#include "latspec/tables.hpp"

#include <cmath>

namespace latspec {

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = {
      {"lcg64_small", Kind::LCG, 64, false,
       {
           {32, "0xfffeb28d", 0.930586, 1.00, 6},
           {32, "0xcffef595", 0.756102, 0.81, 4},
           {33, "0x1dd23bba5", 0.998598, 1.86, 19},
           {33, "0x112a563ed", 0.998387, 1.07, 7},
           {34, "0x3de4f039d", 0.998150, 3.87, 72},
           {34, "0x2cfe81d9d", 0.992874, 2.81, 46},
           {35, "0x78ad72365", 0.995400, 7.54, 313},
           {35, "0x49ffd0d25", 0.991167, 4.62, 109},
       },
       {}},
      {"mcg64_small", Kind::MCG, 64, true,
       {
           {31, "0x7ffc9ef5", 0.930509, 0.50, 2},
           {31, "0x672a3fb5", 0.750046, 0.40, 1},
           {32, "0xef912f85", 0.994558, 0.94, 4},
           {32, "0x89f353b5", 0.997577, 0.54, 2},
           {33, "0x1f0b2b035", 0.996853, 1.94, 22},
           {33, "0x16aa7d615", 0.994427, 1.42, 11},
           {34, "0x3c4b7aba5", 0.992314, 3.77, 81},
           {34, "0x2778c3815", 0.998339, 2.47, 37},
           {35, "0x7d3f85c05", 0.998470, 7.83, 354},
           {35, "0x40dde345d", 0.996172, 4.05, 87},
       },
       {}},
      {"lcg32", Kind::LCG, 32, false, {},
       {
           {16, "0xd9f5", 0.6690, 0.7444, {0.7923, 0.7541, 0.6869, 0.6690, 0.6919}, 0.85},
           {17, "0x1dab5", 0.6403, 0.6588, {0.6652, 0.6468, 0.6555, 0.6455, 0.6403}, 1.85},
           {18, "0x3d575", 0.6988, 0.7362, {0.7304, 0.7186, 0.7855, 0.7422, 0.7222}, 3.83},
           {24, "0xc083c5", 0.7224, 0.8371, {0.9397, 0.8395, 0.7224, 0.7268, 0.7976}, 192.51},
           {32, "0x915f77f5", 0.7591, 0.8038, {0.7900, 0.8641, 0.7932, 0.7713, 0.8325}, 3.7e4},
       }},
      {"mcg32", Kind::MCG, 32, false, {},
       {
           {15, "0x72ed", 0.6814, 0.7502, {0.8356, 0.6814, 0.6978, 0.7213, 0.6909}, 0.90},
           {16, "0xecc5", 0.6610, 0.7462, {0.7066, 0.9008, 0.6610, 0.7483, 0.7002}, 1.85},
           {17, "0x1e92d", 0.6623, 0.7497, {0.8419, 0.6851, 0.6770, 0.7050, 0.6623}, 3.82},
           {18, "0x39e2d", 0.6814, 0.8266, {0.9021, 0.8643, 0.7004, 0.8121, 0.7936}, 7.24},
           {24, "0xe47135", 0.7064, 0.8344, {0.9293, 0.8651, 0.7064, 0.7519, 0.7635}, 456.88},
           {32, "0x93d765dd", 0.7470, 0.8649, {0.9633, 0.8674, 0.7774, 0.7826, 0.7929}, 7.6e4},
       }},
      {"lcg64", Kind::LCG, 64, false, {},
       {
           {32, "0xf9b25d65", 0.7571, 0.8364, {0.9077, 0.8252, 0.7882, 0.7762, 0.7837}, 0.98},
           {33, "0x18a44074d", 0.7525, 0.8105, {0.8694, 0.7932, 0.7786, 0.7525, 0.7609}, 1.54},
           {34, "0x3af78c385", 0.7573, 0.8405, {0.9299, 0.8115, 0.7843, 0.7700, 0.7573}, 3.69},
           {48, "0xc2ec33ef97a5", 0.7590, 0.8821, {0.9947, 0.8554, 0.8299, 0.7617, 0.7887}, 5.0e4},
           {64, "0xd1342543de82ef95", 0.7602, 0.8992, {0.9586, 0.9375, 0.8708, 0.8223, 0.8204}, 3.5e9},
       }},
      {"mcg64", Kind::MCG, 64, false, {},
       {
           {32, "0xe817fb2d", 0.7490, 0.7905, {0.8268, 0.7765, 0.7803, 0.7535, 0.7490}, 1.81},
           {33, "0x1e85bbd25", 0.7630, 0.8401, {0.8499, 0.9149, 0.8147, 0.7971, 0.7899}, 3.82},
           {34, "0x34edd34ad", 0.7524, 0.8670, {0.9749, 0.8506, 0.7789, 0.8145, 0.7550}, 6.62},
           {48, "0xbdcdbb079f8d", 0.7722, 0.8894, {0.9855, 0.8937, 0.7973, 0.8466, 0.7867}, 9.7e4},
           {64, "0xf1357aea2e62a9c5", 0.7584, 0.8797, {0.9705, 0.8444, 0.8415, 0.7928, 0.8202}, 8.1e9},
       }},
      {"lcg128", Kind::LCG, 128, false, {},
       {
           {64, "0xfc0072fa0b15f4fd", 0.7596, 0.8630, {0.9161, 0.9285, 0.7850, 0.8158, 0.7596}, 0.98},
           {65, "0x1ed5301a365eced85", 0.7752, 0.8882, {0.9682, 0.9138, 0.8134, 0.8192, 0.8036}, 1.93},
           {66, "0x3cf736df8904b7285", 0.7579, 0.8810, {0.9869, 0.8444, 0.8468, 0.8096, 0.7698}, 3.81},
           {67, "0x77808d182e9136c35", 0.7592, 0.8982, {0.9721, 0.9324, 0.8682, 0.8175, 0.7995}, 7.47},
           {68, "0xc0c5c8bdde1eae3c5", 0.7774, 0.8656, {0.9675, 0.7774, 0.8283, 0.8138, 0.8222}, 12.05},
           {69, "0x1ffc98ea48aaa4c915", 0.7739, 0.8665, {0.9852, 0.7763, 0.8094, 0.8298, 0.7739}, 31.99},
           {70, "0x3d0e4c1575cfe11085", 0.7551, 0.8845, {0.9768, 0.9173, 0.7864, 0.7937, 0.7959}, 61.06},
           {71, "0x774236e651b3d34775", 0.7603, 0.8844, {0.9696, 0.9168, 0.8108, 0.7603, 0.7662}, 119.26},
           {72, "0xce12be0ad9384349d5", 0.7592, 0.8830, {0.9548, 0.9322, 0.8139, 0.7592, 0.8244}, 206.07},
           {80, "0xe14777aac3fc617a34ad", 0.7651, 0.8642, {0.9779, 0.8050, 0.7993, 0.7744, 0.8040}, 5.8e4},
           {96, "0xdfe1956283473c8e63b49445", 0.7771, 0.8903, {0.9599, 0.9367, 0.8193, 0.8042, 0.8205}, 3.8e9},
           {128, "0xdb36357734e34abb0050d0761fcdfc15", 0.7650, 0.8878, {0.9849, 0.8546, 0.8084, 0.8527, 0.8209}, 1.6e19},
       }},
      {"mcg128", Kind::MCG, 128, false, {},
       {
           {63, "0x7e91d554f7f50a65", 0.7547, 0.8649, {0.9202, 0.9217, 0.7759, 0.8492, 0.7783}, 0.99},
           {64, "0xdefba91144f2b375", 0.7550, 0.8819, {0.9502, 0.9370, 0.7973, 0.8203, 0.7997}, 1.74},
           {65, "0x1f3e451e8032e03cd", 0.7558, 0.8722, {0.9951, 0.8408, 0.7558, 0.7725, 0.8285}, 3.91},
           {66, "0x32afe9369a79aaf95", 0.7734, 0.8722, {0.9180, 0.8897, 0.8898, 0.8057, 0.8011}, 6.34},
           {67, "0x79ee767d1056fa525", 0.7578, 0.8648, {0.9613, 0.8551, 0.8076, 0.7891, 0.7578}, 15.24},
           {68, "0xee8f25664dcc71505", 0.7622, 0.8752, {0.9447, 0.8999, 0.8044, 0.8417, 0.7984}, 29.82},
           {69, "0x1c9539b04653db147d", 0.7570, 0.8728, {0.9577, 0.8853, 0.8133, 0.8074, 0.7758}, 57.17},
           {70, "0x3a6de753da52a34cdd", 0.7575, 0.8725, {0.9645, 0.9030, 0.7793, 0.7827, 0.7575}, 116.86},
           {71, "0x654421647a648c4eb5", 0.7658, 0.8753, {0.9324, 0.9166, 0.8357, 0.8236, 0.7658}, 202.53},
           {72, "0xeee2a2bb3ec40a671d", 0.7627, 0.8693, {0.9875, 0.8125, 0.7791, 0.8248, 0.7627}, 477.77},
           {80, "0xd49d0e59c6b198994025", 0.7610, 0.8727, {0.9591, 0.8845, 0.8281, 0.7708, 0.7860}, 1.1e5},
           {96, "0xb540ecedd0778e2d651421a5", 0.7566, 0.8721, {0.9654, 0.8510, 0.8244, 0.8128, 0.7875}, 6.1e9},
           {128, "0xaadec8c3186345282b4e141f3a1232d5", 0.7571, 0.8799, {0.9869, 0.8706, 0.8056, 0.7838, 0.7571}, 2.5e19},
       }},
  };
  return tables;
}

namespace {

void add_cell(std::vector<VerifyCell>& cells, const std::string& table,
              const std::string& mult, const std::string& name, double expected,
              double computed, double tolerance) {
  cells.push_back({table, mult, name, expected, computed, tolerance,
                   std::fabs(expected - computed) <= tolerance});
}

}  // namespace

std::vector<VerifyCell> verify_table(const ReferenceTable& table,
                                     std::uint64_t node_budget) {
  std::vector<VerifyCell> cells;
  for (const auto& row : table.small_rows) {
    GeneratorSpec spec{table.kind, table.e, from_hex(row.a_hex)};
    MeritResult f2 = figure_of_merit(spec, 2, 1, true, node_budget);
    add_cell(cells, table.name, row.a_hex, "f2", row.f2, f2.f, 1e-4);
    double lambda = lambda_merit(spec);
    if (table.lambda_halved) lambda /= 2;
    add_cell(cells, table.name, row.a_hex, "lambda", row.lambda_printed, lambda, 0.01);
  }
  for (const auto& row : table.good_rows) {
    GeneratorSpec spec{table.kind, table.e, from_hex(row.a_hex)};
    std::vector<double> f;
    for (unsigned d = 2; d <= 8; d++)
      f.push_back(figure_of_merit(spec, d, 1, true, node_budget).f);
    for (unsigned d = 2; d <= 6; d++)
      add_cell(cells, table.name, row.a_hex, "f" + std::to_string(d), row.f[d - 2],
               f[d - 2], 1e-4);
    add_cell(cells, table.name, row.a_hex, "min8", row.min8, minimum_score(f, 8), 1e-4);
    add_cell(cells, table.name, row.a_hex, "harm8", row.harm8, harmonic_score(f, 8), 1e-4);
    double lambda = lambda_merit(spec);
    // The printed figures carry two significant digits once lambda
    // exceeds ~10^3; half a unit in the last printed digit can exceed 1%,
    // so the tolerance is whichever is larger.
    double half_ulp = row.lambda < 1000.0
                          ? 0.005
                          : 0.05 * std::pow(10.0, std::floor(std::log10(row.lambda)));
    add_cell(cells, table.name, row.a_hex, "lambda", row.lambda, lambda,
             std::max(0.01 * row.lambda, half_ulp));
  }
  return cells;
}

}  // namespace latspec
