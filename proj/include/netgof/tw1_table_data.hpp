#pragma once

// Embedded TW1 reference table.  Generated by `netgof tw-table --emit-header`;
// do not edit by hand.

#include <cstdint>

namespace netgof::tw1_data {

inline constexpr std::uint64_t kSeed = 20260819ULL;
inline constexpr std::uint64_t kReplicates = 120000ULL;
inline constexpr int kMatrixN = 4096;
inline constexpr double kMean = -1.2302648519595651;
inline constexpr double kSd = 1.2667810669561312;
inline constexpr int kGridSize = 2241;

inline constexpr double kGrid[] = {
    -8,
    -7.9937500000000004,
    -7.9874999999999998,
    -7.9812500000000002,
    -7.9749999999999996,
    -7.96875,
    -7.9625000000000004,
    -7.9562499999999998,
    -7.9500000000000002,
    -7.9437499999999996,
    -7.9375,
    -7.9312500000000004,
    -7.9249999999999998,
    -7.9187500000000002,
    -7.9124999999999996,
    -7.90625,
    -7.9000000000000004,
    -7.8937499999999998,
    -7.8875000000000002,
    -7.8812499999999996,
    -7.875,
    -7.8687500000000004,
    -7.8624999999999998,
    -7.8562500000000002,
    -7.8499999999999996,
    -7.84375,
    -7.8375000000000004,
    -7.8312499999999998,
    -7.8250000000000002,
    -7.8187499999999996,
    -7.8125,
    -7.8062500000000004,
    -7.7999999999999998,
    -7.7937500000000002,
    -7.7874999999999996,
    -7.78125,
    -7.7750000000000004,
    -7.7687499999999998,
    -7.7625000000000002,
    -7.7562499999999996,
    -7.75,
    -7.7437500000000004,
    -7.7374999999999998,
    -7.7312500000000002,
    -7.7249999999999996,
    -7.71875,
    -7.7125000000000004,
    -7.7062499999999998,
    -7.7000000000000002,
    -7.6937499999999996,
    -7.6875,
    -7.6812500000000004,
    -7.6749999999999998,
    -7.6687500000000002,
    -7.6624999999999996,
    -7.65625,
    -7.6500000000000004,
    -7.6437499999999998,
    -7.6375000000000002,
    -7.6312499999999996,
    -7.625,
    -7.6187500000000004,
    -7.6124999999999998,
    -7.6062500000000002,
    -7.5999999999999996,
    -7.59375,
    -7.5875000000000004,
    -7.5812499999999998,
    -7.5750000000000002,
    -7.5687499999999996,
    -7.5625,
    -7.5562500000000004,
    -7.5499999999999998,
    -7.5437500000000002,
    -7.5374999999999996,
    -7.53125,
    -7.5250000000000004,
    -7.5187499999999998,
    -7.5125000000000002,
    -7.5062499999999996,
    -7.5,
    -7.4937500000000004,
    -7.4874999999999998,
    -7.4812500000000002,
    -7.4749999999999996,
    -7.46875,
    -7.4625000000000004,
    -7.4562499999999998,
    -7.4500000000000002,
    -7.4437499999999996,
    -7.4375,
    -7.4312500000000004,
    -7.4249999999999998,
    -7.4187500000000002,
    -7.4124999999999996,
    -7.40625,
    -7.4000000000000004,
    -7.3937499999999998,
    -7.3875000000000002,
    -7.3812499999999996,
    -7.375,
    -7.3687500000000004,
    -7.3624999999999998,
    -7.3562500000000002,
    -7.3499999999999996,
    -7.34375,
    -7.3375000000000004,
    -7.3312499999999998,
    -7.3250000000000002,
    -7.3187499999999996,
    -7.3125,
    -7.3062500000000004,
    -7.2999999999999998,
    -7.2937500000000002,
    -7.2874999999999996,
    -7.28125,
    -7.2750000000000004,
    -7.2687499999999998,
    -7.2625000000000002,
    -7.2562499999999996,
    -7.25,
    -7.2437500000000004,
    -7.2374999999999998,
    -7.2312500000000002,
    -7.2249999999999996,
    -7.21875,
    -7.2125000000000004,
    -7.2062499999999998,
    -7.2000000000000002,
    -7.1937499999999996,
    -7.1875,
    -7.1812500000000004,
    -7.1749999999999998,
    -7.1687500000000002,
    -7.1624999999999996,
    -7.15625,
    -7.1500000000000004,
    -7.1437499999999998,
    -7.1375000000000002,
    -7.1312499999999996,
    -7.125,
    -7.1187500000000004,
    -7.1124999999999998,
    -7.1062500000000002,
    -7.0999999999999996,
    -7.09375,
    -7.0875000000000004,
    -7.0812499999999998,
    -7.0750000000000002,
    -7.0687499999999996,
    -7.0625,
    -7.0562500000000004,
    -7.0499999999999998,
    -7.0437500000000002,
    -7.0374999999999996,
    -7.03125,
    -7.0250000000000004,
    -7.0187499999999998,
    -7.0125000000000002,
    -7.0062499999999996,
    -7,
    -6.9937500000000004,
    -6.9874999999999998,
    -6.9812500000000002,
    -6.9749999999999996,
    -6.96875,
    -6.9625000000000004,
    -6.9562499999999998,
    -6.9500000000000002,
    -6.9437499999999996,
    -6.9375,
    -6.9312500000000004,
    -6.9249999999999998,
    -6.9187500000000002,
    -6.9124999999999996,
    -6.90625,
    -6.9000000000000004,
    -6.8937499999999998,
    -6.8875000000000002,
    -6.8812499999999996,
    -6.875,
    -6.8687500000000004,
    -6.8624999999999998,
    -6.8562500000000002,
    -6.8499999999999996,
    -6.84375,
    -6.8375000000000004,
    -6.8312499999999998,
    -6.8250000000000002,
    -6.8187499999999996,
    -6.8125,
    -6.8062500000000004,
    -6.7999999999999998,
    -6.7937500000000002,
    -6.7874999999999996,
    -6.78125,
    -6.7750000000000004,
    -6.7687499999999998,
    -6.7625000000000002,
    -6.7562499999999996,
    -6.75,
    -6.7437500000000004,
    -6.7374999999999998,
    -6.7312500000000002,
    -6.7249999999999996,
    -6.71875,
    -6.7125000000000004,
    -6.7062499999999998,
    -6.7000000000000002,
    -6.6937499999999996,
    -6.6875,
    -6.6812500000000004,
    -6.6749999999999998,
    -6.6687500000000002,
    -6.6624999999999996,
    -6.65625,
    -6.6500000000000004,
    -6.6437499999999998,
    -6.6375000000000002,
    -6.6312499999999996,
    -6.625,
    -6.6187500000000004,
    -6.6124999999999998,
    -6.6062500000000002,
    -6.5999999999999996,
    -6.59375,
    -6.5875000000000004,
    -6.5812499999999998,
    -6.5750000000000002,
    -6.5687499999999996,
    -6.5625,
    -6.5562500000000004,
    -6.5499999999999998,
    -6.5437500000000002,
    -6.5374999999999996,
    -6.53125,
    -6.5250000000000004,
    -6.5187499999999998,
    -6.5125000000000002,
    -6.5062499999999996,
    -6.5,
    -6.4937500000000004,
    -6.4874999999999998,
    -6.4812500000000002,
    -6.4749999999999996,
    -6.46875,
    -6.4625000000000004,
    -6.4562499999999998,
    -6.4500000000000002,
    -6.4437499999999996,
    -6.4375,
    -6.4312500000000004,
    -6.4249999999999998,
    -6.4187500000000002,
    -6.4124999999999996,
    -6.40625,
    -6.4000000000000004,
    -6.3937499999999998,
    -6.3875000000000002,
    -6.3812499999999996,
    -6.375,
    -6.3687500000000004,
    -6.3624999999999998,
    -6.3562500000000002,
    -6.3499999999999996,
    -6.34375,
    -6.3375000000000004,
    -6.3312499999999998,
    -6.3250000000000002,
    -6.3187499999999996,
    -6.3125,
    -6.3062500000000004,
    -6.2999999999999998,
    -6.2937500000000002,
    -6.2874999999999996,
    -6.28125,
    -6.2750000000000004,
    -6.2687499999999998,
    -6.2625000000000002,
    -6.2562499999999996,
    -6.25,
    -6.2437500000000004,
    -6.2374999999999998,
    -6.2312500000000002,
    -6.2249999999999996,
    -6.21875,
    -6.2125000000000004,
    -6.2062499999999998,
    -6.2000000000000002,
    -6.1937499999999996,
    -6.1875,
    -6.1812500000000004,
    -6.1749999999999998,
    -6.1687500000000002,
    -6.1624999999999996,
    -6.15625,
    -6.1500000000000004,
    -6.1437499999999998,
    -6.1375000000000002,
    -6.1312499999999996,
    -6.125,
    -6.1187500000000004,
    -6.1124999999999998,
    -6.1062500000000002,
    -6.0999999999999996,
    -6.09375,
    -6.0875000000000004,
    -6.0812499999999998,
    -6.0750000000000002,
    -6.0687499999999996,
    -6.0625,
    -6.0562500000000004,
    -6.0499999999999998,
    -6.0437500000000002,
    -6.0374999999999996,
    -6.03125,
    -6.0250000000000004,
    -6.0187499999999998,
    -6.0125000000000002,
    -6.0062499999999996,
    -6,
    -5.9937500000000004,
    -5.9874999999999998,
    -5.9812499999999993,
    -5.9749999999999996,
    -5.96875,
    -5.9625000000000004,
    -5.9562499999999998,
    -5.9499999999999993,
    -5.9437499999999996,
    -5.9375,
    -5.9312500000000004,
    -5.9249999999999998,
    -5.9187499999999993,
    -5.9124999999999996,
    -5.90625,
    -5.9000000000000004,
    -5.8937499999999998,
    -5.8874999999999993,
    -5.8812499999999996,
    -5.875,
    -5.8687500000000004,
    -5.8624999999999998,
    -5.8562499999999993,
    -5.8499999999999996,
    -5.84375,
    -5.8375000000000004,
    -5.8312499999999998,
    -5.8249999999999993,
    -5.8187499999999996,
    -5.8125,
    -5.8062500000000004,
    -5.7999999999999998,
    -5.7937499999999993,
    -5.7874999999999996,
    -5.78125,
    -5.7750000000000004,
    -5.7687499999999998,
    -5.7624999999999993,
    -5.7562499999999996,
    -5.75,
    -5.7437500000000004,
    -5.7374999999999998,
    -5.7312499999999993,
    -5.7249999999999996,
    -5.71875,
    -5.7125000000000004,
    -5.7062499999999998,
    -5.6999999999999993,
    -5.6937499999999996,
    -5.6875,
    -5.6812500000000004,
    -5.6749999999999998,
    -5.6687499999999993,
    -5.6624999999999996,
    -5.65625,
    -5.6500000000000004,
    -5.6437499999999998,
    -5.6374999999999993,
    -5.6312499999999996,
    -5.625,
    -5.6187500000000004,
    -5.6124999999999998,
    -5.6062499999999993,
    -5.5999999999999996,
    -5.59375,
    -5.5875000000000004,
    -5.5812499999999998,
    -5.5749999999999993,
    -5.5687499999999996,
    -5.5625,
    -5.5562500000000004,
    -5.5499999999999998,
    -5.5437499999999993,
    -5.5374999999999996,
    -5.53125,
    -5.5250000000000004,
    -5.5187499999999998,
    -5.5124999999999993,
    -5.5062499999999996,
    -5.5,
    -5.4937500000000004,
    -5.4874999999999998,
    -5.4812499999999993,
    -5.4749999999999996,
    -5.46875,
    -5.4625000000000004,
    -5.4562499999999998,
    -5.4499999999999993,
    -5.4437499999999996,
    -5.4375,
    -5.4312500000000004,
    -5.4249999999999998,
    -5.4187499999999993,
    -5.4124999999999996,
    -5.40625,
    -5.4000000000000004,
    -5.3937499999999998,
    -5.3874999999999993,
    -5.3812499999999996,
    -5.375,
    -5.3687500000000004,
    -5.3624999999999998,
    -5.3562499999999993,
    -5.3499999999999996,
    -5.34375,
    -5.3375000000000004,
    -5.3312499999999998,
    -5.3249999999999993,
    -5.3187499999999996,
    -5.3125,
    -5.3062500000000004,
    -5.2999999999999998,
    -5.2937499999999993,
    -5.2874999999999996,
    -5.28125,
    -5.2750000000000004,
    -5.2687499999999998,
    -5.2624999999999993,
    -5.2562499999999996,
    -5.25,
    -5.2437500000000004,
    -5.2374999999999998,
    -5.2312499999999993,
    -5.2249999999999996,
    -5.21875,
    -5.2125000000000004,
    -5.2062499999999998,
    -5.1999999999999993,
    -5.1937499999999996,
    -5.1875,
    -5.1812500000000004,
    -5.1749999999999998,
    -5.1687499999999993,
    -5.1624999999999996,
    -5.15625,
    -5.1500000000000004,
    -5.1437499999999998,
    -5.1374999999999993,
    -5.1312499999999996,
    -5.125,
    -5.1187500000000004,
    -5.1124999999999998,
    -5.1062499999999993,
    -5.0999999999999996,
    -5.09375,
    -5.0875000000000004,
    -5.0812499999999998,
    -5.0749999999999993,
    -5.0687499999999996,
    -5.0625,
    -5.0562500000000004,
    -5.0499999999999998,
    -5.0437499999999993,
    -5.0374999999999996,
    -5.03125,
    -5.0250000000000004,
    -5.0187499999999998,
    -5.0124999999999993,
    -5.0062499999999996,
    -5,
    -4.9937500000000004,
    -4.9874999999999998,
    -4.9812499999999993,
    -4.9749999999999996,
    -4.96875,
    -4.9625000000000004,
    -4.9562499999999998,
    -4.9499999999999993,
    -4.9437499999999996,
    -4.9375,
    -4.9312500000000004,
    -4.9249999999999998,
    -4.9187499999999993,
    -4.9124999999999996,
    -4.90625,
    -4.9000000000000004,
    -4.8937499999999998,
    -4.8874999999999993,
    -4.8812499999999996,
    -4.875,
    -4.8687500000000004,
    -4.8624999999999998,
    -4.8562499999999993,
    -4.8499999999999996,
    -4.84375,
    -4.8375000000000004,
    -4.8312499999999998,
    -4.8249999999999993,
    -4.8187499999999996,
    -4.8125,
    -4.8062500000000004,
    -4.7999999999999998,
    -4.7937499999999993,
    -4.7874999999999996,
    -4.78125,
    -4.7750000000000004,
    -4.7687499999999998,
    -4.7624999999999993,
    -4.7562499999999996,
    -4.75,
    -4.7437500000000004,
    -4.7374999999999998,
    -4.7312499999999993,
    -4.7249999999999996,
    -4.71875,
    -4.7125000000000004,
    -4.7062499999999998,
    -4.6999999999999993,
    -4.6937499999999996,
    -4.6875,
    -4.6812500000000004,
    -4.6749999999999998,
    -4.6687499999999993,
    -4.6624999999999996,
    -4.65625,
    -4.6500000000000004,
    -4.6437499999999998,
    -4.6374999999999993,
    -4.6312499999999996,
    -4.625,
    -4.6187500000000004,
    -4.6124999999999998,
    -4.6062499999999993,
    -4.5999999999999996,
    -4.59375,
    -4.5875000000000004,
    -4.5812499999999998,
    -4.5749999999999993,
    -4.5687499999999996,
    -4.5625,
    -4.5562500000000004,
    -4.5499999999999998,
    -4.5437499999999993,
    -4.5374999999999996,
    -4.53125,
    -4.5250000000000004,
    -4.5187499999999998,
    -4.5124999999999993,
    -4.5062499999999996,
    -4.5,
    -4.4937500000000004,
    -4.4874999999999998,
    -4.4812499999999993,
    -4.4749999999999996,
    -4.46875,
    -4.4625000000000004,
    -4.4562499999999998,
    -4.4499999999999993,
    -4.4437499999999996,
    -4.4375,
    -4.4312500000000004,
    -4.4249999999999998,
    -4.4187499999999993,
    -4.4124999999999996,
    -4.40625,
    -4.4000000000000004,
    -4.3937499999999998,
    -4.3874999999999993,
    -4.3812499999999996,
    -4.375,
    -4.3687500000000004,
    -4.3624999999999998,
    -4.3562499999999993,
    -4.3499999999999996,
    -4.34375,
    -4.3375000000000004,
    -4.3312499999999998,
    -4.3249999999999993,
    -4.3187499999999996,
    -4.3125,
    -4.3062500000000004,
    -4.2999999999999998,
    -4.2937499999999993,
    -4.2874999999999996,
    -4.28125,
    -4.2750000000000004,
    -4.2687499999999998,
    -4.2624999999999993,
    -4.2562499999999996,
    -4.25,
    -4.2437500000000004,
    -4.2374999999999998,
    -4.2312499999999993,
    -4.2249999999999996,
    -4.21875,
    -4.2125000000000004,
    -4.2062499999999998,
    -4.1999999999999993,
    -4.1937499999999996,
    -4.1875,
    -4.1812500000000004,
    -4.1749999999999998,
    -4.1687499999999993,
    -4.1624999999999996,
    -4.15625,
    -4.1500000000000004,
    -4.1437499999999998,
    -4.1374999999999993,
    -4.1312499999999996,
    -4.125,
    -4.1187500000000004,
    -4.1124999999999998,
    -4.1062499999999993,
    -4.0999999999999996,
    -4.09375,
    -4.0875000000000004,
    -4.0812499999999998,
    -4.0749999999999993,
    -4.0687499999999996,
    -4.0625,
    -4.0562500000000004,
    -4.0499999999999998,
    -4.0437499999999993,
    -4.0374999999999996,
    -4.03125,
    -4.0250000000000004,
    -4.0187499999999998,
    -4.0124999999999993,
    -4.0062499999999996,
    -4,
    -3.9937499999999995,
    -3.9874999999999998,
    -3.9812500000000002,
    -3.9749999999999996,
    -3.96875,
    -3.9624999999999995,
    -3.9562499999999998,
    -3.9500000000000002,
    -3.9437499999999996,
    -3.9375,
    -3.9312499999999995,
    -3.9249999999999998,
    -3.9187500000000002,
    -3.9124999999999996,
    -3.90625,
    -3.8999999999999995,
    -3.8937499999999998,
    -3.8875000000000002,
    -3.8812499999999996,
    -3.875,
    -3.8687499999999995,
    -3.8624999999999998,
    -3.8562500000000002,
    -3.8499999999999996,
    -3.84375,
    -3.8374999999999995,
    -3.8312499999999998,
    -3.8250000000000002,
    -3.8187499999999996,
    -3.8125,
    -3.8062499999999995,
    -3.7999999999999998,
    -3.7937500000000002,
    -3.7874999999999996,
    -3.78125,
    -3.7749999999999995,
    -3.7687499999999998,
    -3.7625000000000002,
    -3.7562499999999996,
    -3.75,
    -3.7437499999999995,
    -3.7374999999999998,
    -3.7312500000000002,
    -3.7249999999999996,
    -3.71875,
    -3.7124999999999995,
    -3.7062499999999998,
    -3.7000000000000002,
    -3.6937499999999996,
    -3.6875,
    -3.6812499999999995,
    -3.6749999999999998,
    -3.6687500000000002,
    -3.6624999999999996,
    -3.65625,
    -3.6499999999999995,
    -3.6437499999999998,
    -3.6375000000000002,
    -3.6312499999999996,
    -3.625,
    -3.6187499999999995,
    -3.6124999999999998,
    -3.6062500000000002,
    -3.5999999999999996,
    -3.59375,
    -3.5874999999999995,
    -3.5812499999999998,
    -3.5750000000000002,
    -3.5687499999999996,
    -3.5625,
    -3.5562499999999995,
    -3.5499999999999998,
    -3.5437500000000002,
    -3.5374999999999996,
    -3.53125,
    -3.5249999999999995,
    -3.5187499999999998,
    -3.5125000000000002,
    -3.5062499999999996,
    -3.5,
    -3.4937499999999995,
    -3.4874999999999998,
    -3.4812500000000002,
    -3.4749999999999996,
    -3.46875,
    -3.4624999999999995,
    -3.4562499999999998,
    -3.4500000000000002,
    -3.4437499999999996,
    -3.4375,
    -3.4312499999999995,
    -3.4249999999999998,
    -3.4187500000000002,
    -3.4124999999999996,
    -3.40625,
    -3.3999999999999995,
    -3.3937499999999998,
    -3.3875000000000002,
    -3.3812499999999996,
    -3.375,
    -3.3687499999999995,
    -3.3624999999999998,
    -3.3562500000000002,
    -3.3499999999999996,
    -3.34375,
    -3.3374999999999995,
    -3.3312499999999998,
    -3.3250000000000002,
    -3.3187499999999996,
    -3.3125,
    -3.3062499999999995,
    -3.2999999999999998,
    -3.2937500000000002,
    -3.2874999999999996,
    -3.28125,
    -3.2749999999999995,
    -3.2687499999999998,
    -3.2625000000000002,
    -3.2562499999999996,
    -3.25,
    -3.2437499999999995,
    -3.2374999999999998,
    -3.2312500000000002,
    -3.2249999999999996,
    -3.21875,
    -3.2124999999999995,
    -3.2062499999999998,
    -3.1999999999999993,
    -3.1937499999999996,
    -3.1875,
    -3.1812499999999995,
    -3.1749999999999998,
    -3.1687499999999993,
    -3.1624999999999996,
    -3.15625,
    -3.1499999999999995,
    -3.1437499999999998,
    -3.1374999999999993,
    -3.1312499999999996,
    -3.125,
    -3.1187499999999995,
    -3.1124999999999998,
    -3.1062499999999993,
    -3.0999999999999996,
    -3.09375,
    -3.0874999999999995,
    -3.0812499999999998,
    -3.0749999999999993,
    -3.0687499999999996,
    -3.0625,
    -3.0562499999999995,
    -3.0499999999999998,
    -3.0437499999999993,
    -3.0374999999999996,
    -3.03125,
    -3.0249999999999995,
    -3.0187499999999998,
    -3.0124999999999993,
    -3.0062499999999996,
    -3,
    -2.9937499999999995,
    -2.9874999999999998,
    -2.9812499999999993,
    -2.9749999999999996,
    -2.96875,
    -2.9624999999999995,
    -2.9562499999999998,
    -2.9499999999999993,
    -2.9437499999999996,
    -2.9375,
    -2.9312499999999995,
    -2.9249999999999998,
    -2.9187499999999993,
    -2.9124999999999996,
    -2.90625,
    -2.8999999999999995,
    -2.8937499999999998,
    -2.8874999999999993,
    -2.8812499999999996,
    -2.875,
    -2.8687499999999995,
    -2.8624999999999998,
    -2.8562499999999993,
    -2.8499999999999996,
    -2.84375,
    -2.8374999999999995,
    -2.8312499999999998,
    -2.8249999999999993,
    -2.8187499999999996,
    -2.8125,
    -2.8062499999999995,
    -2.7999999999999998,
    -2.7937499999999993,
    -2.7874999999999996,
    -2.78125,
    -2.7749999999999995,
    -2.7687499999999998,
    -2.7624999999999993,
    -2.7562499999999996,
    -2.75,
    -2.7437499999999995,
    -2.7374999999999998,
    -2.7312499999999993,
    -2.7249999999999996,
    -2.71875,
    -2.7124999999999995,
    -2.7062499999999998,
    -2.6999999999999993,
    -2.6937499999999996,
    -2.6875,
    -2.6812499999999995,
    -2.6749999999999998,
    -2.6687499999999993,
    -2.6624999999999996,
    -2.65625,
    -2.6499999999999995,
    -2.6437499999999998,
    -2.6374999999999993,
    -2.6312499999999996,
    -2.625,
    -2.6187499999999995,
    -2.6124999999999998,
    -2.6062499999999993,
    -2.5999999999999996,
    -2.59375,
    -2.5874999999999995,
    -2.5812499999999998,
    -2.5749999999999993,
    -2.5687499999999996,
    -2.5625,
    -2.5562499999999995,
    -2.5499999999999998,
    -2.5437499999999993,
    -2.5374999999999996,
    -2.53125,
    -2.5249999999999995,
    -2.5187499999999998,
    -2.5124999999999993,
    -2.5062499999999996,
    -2.5,
    -2.4937499999999995,
    -2.4874999999999998,
    -2.4812499999999993,
    -2.4749999999999996,
    -2.46875,
    -2.4624999999999995,
    -2.4562499999999998,
    -2.4499999999999993,
    -2.4437499999999996,
    -2.4375,
    -2.4312499999999995,
    -2.4249999999999998,
    -2.4187499999999993,
    -2.4124999999999996,
    -2.40625,
    -2.3999999999999995,
    -2.3937499999999998,
    -2.3874999999999993,
    -2.3812499999999996,
    -2.375,
    -2.3687499999999995,
    -2.3624999999999998,
    -2.3562499999999993,
    -2.3499999999999996,
    -2.34375,
    -2.3374999999999995,
    -2.3312499999999998,
    -2.3249999999999993,
    -2.3187499999999996,
    -2.3125,
    -2.3062499999999995,
    -2.2999999999999998,
    -2.2937499999999993,
    -2.2874999999999996,
    -2.28125,
    -2.2749999999999995,
    -2.2687499999999998,
    -2.2624999999999993,
    -2.2562499999999996,
    -2.25,
    -2.2437499999999995,
    -2.2374999999999998,
    -2.2312499999999993,
    -2.2249999999999996,
    -2.21875,
    -2.2124999999999995,
    -2.2062499999999998,
    -2.1999999999999993,
    -2.1937499999999996,
    -2.1875,
    -2.1812499999999995,
    -2.1749999999999998,
    -2.1687499999999993,
    -2.1624999999999996,
    -2.15625,
    -2.1499999999999995,
    -2.1437499999999998,
    -2.1374999999999993,
    -2.1312499999999996,
    -2.125,
    -2.1187499999999995,
    -2.1124999999999998,
    -2.1062499999999993,
    -2.0999999999999996,
    -2.09375,
    -2.0874999999999995,
    -2.0812499999999998,
    -2.0749999999999993,
    -2.0687499999999996,
    -2.0625,
    -2.0562499999999995,
    -2.0499999999999998,
    -2.0437499999999993,
    -2.0374999999999996,
    -2.03125,
    -2.0249999999999995,
    -2.0187499999999998,
    -2.0124999999999993,
    -2.0062499999999996,
    -2,
    -1.9937499999999995,
    -1.9874999999999998,
    -1.9812499999999993,
    -1.9749999999999996,
    -1.96875,
    -1.9624999999999995,
    -1.9562499999999998,
    -1.9499999999999993,
    -1.9437499999999996,
    -1.9375,
    -1.9312499999999995,
    -1.9249999999999998,
    -1.9187499999999993,
    -1.9124999999999996,
    -1.90625,
    -1.8999999999999995,
    -1.8937499999999998,
    -1.8874999999999993,
    -1.8812499999999996,
    -1.875,
    -1.8687499999999995,
    -1.8624999999999998,
    -1.8562499999999993,
    -1.8499999999999996,
    -1.84375,
    -1.8374999999999995,
    -1.8312499999999998,
    -1.8249999999999993,
    -1.8187499999999996,
    -1.8125,
    -1.8062499999999995,
    -1.7999999999999998,
    -1.7937499999999993,
    -1.7874999999999996,
    -1.78125,
    -1.7749999999999995,
    -1.7687499999999998,
    -1.7624999999999993,
    -1.7562499999999996,
    -1.75,
    -1.7437499999999995,
    -1.7374999999999998,
    -1.7312499999999993,
    -1.7249999999999996,
    -1.71875,
    -1.7124999999999995,
    -1.7062499999999998,
    -1.6999999999999993,
    -1.6937499999999996,
    -1.6875,
    -1.6812499999999995,
    -1.6749999999999998,
    -1.6687499999999993,
    -1.6624999999999996,
    -1.65625,
    -1.6499999999999995,
    -1.6437499999999998,
    -1.6374999999999993,
    -1.6312499999999996,
    -1.625,
    -1.6187499999999995,
    -1.6124999999999998,
    -1.6062499999999993,
    -1.5999999999999996,
    -1.59375,
    -1.5874999999999995,
    -1.5812499999999998,
    -1.5749999999999993,
    -1.5687499999999996,
    -1.5625,
    -1.5562499999999995,
    -1.5499999999999998,
    -1.5437499999999993,
    -1.5374999999999996,
    -1.53125,
    -1.5249999999999995,
    -1.5187499999999998,
    -1.5124999999999993,
    -1.5062499999999996,
    -1.5,
    -1.4937499999999995,
    -1.4874999999999998,
    -1.4812499999999993,
    -1.4749999999999996,
    -1.46875,
    -1.4624999999999995,
    -1.4562499999999998,
    -1.4499999999999993,
    -1.4437499999999996,
    -1.4375,
    -1.4312499999999995,
    -1.4249999999999998,
    -1.4187499999999993,
    -1.4124999999999996,
    -1.40625,
    -1.3999999999999995,
    -1.3937499999999998,
    -1.3874999999999993,
    -1.3812499999999996,
    -1.375,
    -1.3687499999999995,
    -1.3624999999999998,
    -1.3562499999999993,
    -1.3499999999999996,
    -1.34375,
    -1.3374999999999995,
    -1.3312499999999998,
    -1.3249999999999993,
    -1.3187499999999996,
    -1.3125,
    -1.3062499999999995,
    -1.2999999999999998,
    -1.2937499999999993,
    -1.2874999999999996,
    -1.28125,
    -1.2749999999999995,
    -1.2687499999999998,
    -1.2624999999999993,
    -1.2562499999999996,
    -1.25,
    -1.2437499999999995,
    -1.2374999999999998,
    -1.2312499999999993,
    -1.2249999999999996,
    -1.21875,
    -1.2124999999999995,
    -1.2062499999999998,
    -1.1999999999999993,
    -1.1937499999999996,
    -1.1875,
    -1.1812499999999995,
    -1.1749999999999998,
    -1.1687499999999993,
    -1.1624999999999996,
    -1.15625,
    -1.1499999999999995,
    -1.1437499999999998,
    -1.1374999999999993,
    -1.1312499999999996,
    -1.125,
    -1.1187499999999995,
    -1.1124999999999998,
    -1.1062499999999993,
    -1.0999999999999996,
    -1.09375,
    -1.0874999999999995,
    -1.0812499999999998,
    -1.0749999999999993,
    -1.0687499999999996,
    -1.0625,
    -1.0562499999999995,
    -1.0499999999999998,
    -1.0437499999999993,
    -1.0374999999999996,
    -1.03125,
    -1.0249999999999995,
    -1.0187499999999998,
    -1.0124999999999993,
    -1.0062499999999996,
    -1,
    -0.99374999999999947,
    -0.98749999999999982,
    -0.98124999999999929,
    -0.97499999999999964,
    -0.96875,
    -0.96249999999999947,
    -0.95624999999999982,
    -0.94999999999999929,
    -0.94374999999999964,
    -0.9375,
    -0.93124999999999947,
    -0.92499999999999982,
    -0.91874999999999929,
    -0.91249999999999964,
    -0.90625,
    -0.89999999999999947,
    -0.89374999999999982,
    -0.88749999999999929,
    -0.88124999999999964,
    -0.875,
    -0.86874999999999947,
    -0.86249999999999982,
    -0.85624999999999929,
    -0.84999999999999964,
    -0.84375,
    -0.83749999999999947,
    -0.83124999999999982,
    -0.82499999999999929,
    -0.81874999999999964,
    -0.8125,
    -0.80624999999999947,
    -0.79999999999999982,
    -0.79374999999999929,
    -0.78749999999999964,
    -0.78125,
    -0.77499999999999947,
    -0.76874999999999982,
    -0.76249999999999929,
    -0.75624999999999964,
    -0.75,
    -0.74374999999999947,
    -0.73749999999999982,
    -0.73124999999999929,
    -0.72499999999999964,
    -0.71875,
    -0.71249999999999947,
    -0.70624999999999982,
    -0.69999999999999929,
    -0.69374999999999964,
    -0.6875,
    -0.68124999999999947,
    -0.67499999999999982,
    -0.66874999999999929,
    -0.66249999999999964,
    -0.65625,
    -0.64999999999999947,
    -0.64374999999999982,
    -0.63749999999999929,
    -0.63124999999999964,
    -0.625,
    -0.61874999999999947,
    -0.61249999999999982,
    -0.60624999999999929,
    -0.59999999999999964,
    -0.59375,
    -0.58749999999999947,
    -0.58124999999999982,
    -0.57499999999999929,
    -0.56874999999999964,
    -0.5625,
    -0.55624999999999947,
    -0.54999999999999982,
    -0.54374999999999929,
    -0.53749999999999964,
    -0.53125,
    -0.52499999999999947,
    -0.51874999999999982,
    -0.51249999999999929,
    -0.50624999999999964,
    -0.5,
    -0.49374999999999947,
    -0.48749999999999982,
    -0.48124999999999929,
    -0.47499999999999964,
    -0.46875,
    -0.46249999999999947,
    -0.45624999999999982,
    -0.44999999999999929,
    -0.44374999999999964,
    -0.4375,
    -0.43124999999999947,
    -0.42499999999999982,
    -0.41874999999999929,
    -0.41249999999999964,
    -0.40625,
    -0.39999999999999947,
    -0.39374999999999982,
    -0.38749999999999929,
    -0.38124999999999964,
    -0.375,
    -0.36874999999999947,
    -0.36249999999999982,
    -0.35624999999999929,
    -0.34999999999999964,
    -0.34375,
    -0.33749999999999947,
    -0.33124999999999982,
    -0.32499999999999929,
    -0.31874999999999964,
    -0.3125,
    -0.30624999999999947,
    -0.29999999999999982,
    -0.29374999999999929,
    -0.28749999999999964,
    -0.28125,
    -0.27499999999999947,
    -0.26874999999999982,
    -0.26249999999999929,
    -0.25624999999999964,
    -0.25,
    -0.24374999999999947,
    -0.23749999999999982,
    -0.23124999999999929,
    -0.22499999999999964,
    -0.21875,
    -0.21249999999999947,
    -0.20624999999999982,
    -0.19999999999999929,
    -0.19374999999999964,
    -0.1875,
    -0.18124999999999947,
    -0.17499999999999982,
    -0.16874999999999929,
    -0.16249999999999964,
    -0.15625,
    -0.14999999999999947,
    -0.14374999999999982,
    -0.13749999999999929,
    -0.13124999999999964,
    -0.125,
    -0.11874999999999947,
    -0.11249999999999982,
    -0.10624999999999929,
    -0.099999999999999645,
    -0.09375,
    -0.087499999999999467,
    -0.081249999999999822,
    -0.074999999999999289,
    -0.068749999999999645,
    -0.0625,
    -0.056249999999999467,
    -0.049999999999999822,
    -0.043749999999999289,
    -0.037499999999999645,
    -0.03125,
    -0.024999999999999467,
    -0.018749999999999822,
    -0.012499999999999289,
    -0.0062499999999996447,
    0,
    0.0062499999999996447,
    0.012500000000001066,
    0.018750000000000711,
    0.025000000000000355,
    0.03125,
    0.037499999999999645,
    0.043750000000001066,
    0.050000000000000711,
    0.056250000000000355,
    0.0625,
    0.068749999999999645,
    0.075000000000001066,
    0.081250000000000711,
    0.087500000000000355,
    0.09375,
    0.099999999999999645,
    0.10625000000000107,
    0.11250000000000071,
    0.11875000000000036,
    0.125,
    0.13124999999999964,
    0.13750000000000107,
    0.14375000000000071,
    0.15000000000000036,
    0.15625,
    0.16249999999999964,
    0.16875000000000107,
    0.17500000000000071,
    0.18125000000000036,
    0.1875,
    0.19374999999999964,
    0.20000000000000107,
    0.20625000000000071,
    0.21250000000000036,
    0.21875,
    0.22499999999999964,
    0.23125000000000107,
    0.23750000000000071,
    0.24375000000000036,
    0.25,
    0.25624999999999964,
    0.26250000000000107,
    0.26875000000000071,
    0.27500000000000036,
    0.28125,
    0.28749999999999964,
    0.29375000000000107,
    0.30000000000000071,
    0.30625000000000036,
    0.3125,
    0.31874999999999964,
    0.32500000000000107,
    0.33125000000000071,
    0.33750000000000036,
    0.34375,
    0.34999999999999964,
    0.35625000000000107,
    0.36250000000000071,
    0.36875000000000036,
    0.375,
    0.38124999999999964,
    0.38750000000000107,
    0.39375000000000071,
    0.40000000000000036,
    0.40625,
    0.41249999999999964,
    0.41875000000000107,
    0.42500000000000071,
    0.43125000000000036,
    0.4375,
    0.44374999999999964,
    0.45000000000000107,
    0.45625000000000071,
    0.46250000000000036,
    0.46875,
    0.47499999999999964,
    0.48125000000000107,
    0.48750000000000071,
    0.49375000000000036,
    0.5,
    0.50624999999999964,
    0.51250000000000107,
    0.51875000000000071,
    0.52500000000000036,
    0.53125,
    0.53749999999999964,
    0.54375000000000107,
    0.55000000000000071,
    0.55625000000000036,
    0.5625,
    0.56874999999999964,
    0.57500000000000107,
    0.58125000000000071,
    0.58750000000000036,
    0.59375,
    0.59999999999999964,
    0.60625000000000107,
    0.61250000000000071,
    0.61875000000000036,
    0.625,
    0.63124999999999964,
    0.63750000000000107,
    0.64375000000000071,
    0.65000000000000036,
    0.65625,
    0.66249999999999964,
    0.66875000000000107,
    0.67500000000000071,
    0.68125000000000036,
    0.6875,
    0.69374999999999964,
    0.70000000000000107,
    0.70625000000000071,
    0.71250000000000036,
    0.71875,
    0.72499999999999964,
    0.73125000000000107,
    0.73750000000000071,
    0.74375000000000036,
    0.75,
    0.75624999999999964,
    0.76250000000000107,
    0.76875000000000071,
    0.77500000000000036,
    0.78125,
    0.78749999999999964,
    0.79375000000000107,
    0.80000000000000071,
    0.80625000000000036,
    0.8125,
    0.81874999999999964,
    0.82500000000000107,
    0.83125000000000071,
    0.83750000000000036,
    0.84375,
    0.84999999999999964,
    0.85625000000000107,
    0.86250000000000071,
    0.86875000000000036,
    0.875,
    0.88124999999999964,
    0.88750000000000107,
    0.89375000000000071,
    0.90000000000000036,
    0.90625,
    0.91249999999999964,
    0.91875000000000107,
    0.92500000000000071,
    0.93125000000000036,
    0.9375,
    0.94374999999999964,
    0.95000000000000107,
    0.95625000000000071,
    0.96250000000000036,
    0.96875,
    0.97499999999999964,
    0.98125000000000107,
    0.98750000000000071,
    0.99375000000000036,
    1,
    1.0062499999999996,
    1.0125000000000011,
    1.0187500000000007,
    1.0250000000000004,
    1.03125,
    1.0374999999999996,
    1.0437500000000011,
    1.0500000000000007,
    1.0562500000000004,
    1.0625,
    1.0687499999999996,
    1.0750000000000011,
    1.0812500000000007,
    1.0875000000000004,
    1.09375,
    1.0999999999999996,
    1.1062500000000011,
    1.1125000000000007,
    1.1187500000000004,
    1.125,
    1.1312499999999996,
    1.1375000000000011,
    1.1437500000000007,
    1.1500000000000004,
    1.15625,
    1.1624999999999996,
    1.1687500000000011,
    1.1750000000000007,
    1.1812500000000004,
    1.1875,
    1.1937499999999996,
    1.2000000000000011,
    1.2062500000000007,
    1.2125000000000004,
    1.21875,
    1.2249999999999996,
    1.2312500000000011,
    1.2375000000000007,
    1.2437500000000004,
    1.25,
    1.2562499999999996,
    1.2625000000000011,
    1.2687500000000007,
    1.2750000000000004,
    1.28125,
    1.2874999999999996,
    1.2937500000000011,
    1.3000000000000007,
    1.3062500000000004,
    1.3125,
    1.3187499999999996,
    1.3250000000000011,
    1.3312500000000007,
    1.3375000000000004,
    1.34375,
    1.3499999999999996,
    1.3562500000000011,
    1.3625000000000007,
    1.3687500000000004,
    1.375,
    1.3812499999999996,
    1.3875000000000011,
    1.3937500000000007,
    1.4000000000000004,
    1.40625,
    1.4124999999999996,
    1.4187500000000011,
    1.4250000000000007,
    1.4312500000000004,
    1.4375,
    1.4437499999999996,
    1.4500000000000011,
    1.4562500000000007,
    1.4625000000000004,
    1.46875,
    1.4749999999999996,
    1.4812500000000011,
    1.4875000000000007,
    1.4937500000000004,
    1.5,
    1.5062499999999996,
    1.5125000000000011,
    1.5187500000000007,
    1.5250000000000004,
    1.53125,
    1.5374999999999996,
    1.5437500000000011,
    1.5500000000000007,
    1.5562500000000004,
    1.5625,
    1.5687499999999996,
    1.5750000000000011,
    1.5812500000000007,
    1.5875000000000004,
    1.59375,
    1.6000000000000014,
    1.6062500000000011,
    1.6125000000000007,
    1.6187500000000004,
    1.625,
    1.6312500000000014,
    1.6375000000000011,
    1.6437500000000007,
    1.6500000000000004,
    1.65625,
    1.6625000000000014,
    1.6687500000000011,
    1.6750000000000007,
    1.6812500000000004,
    1.6875,
    1.6937500000000014,
    1.7000000000000011,
    1.7062500000000007,
    1.7125000000000004,
    1.71875,
    1.7250000000000014,
    1.7312500000000011,
    1.7375000000000007,
    1.7437500000000004,
    1.75,
    1.7562500000000014,
    1.7625000000000011,
    1.7687500000000007,
    1.7750000000000004,
    1.78125,
    1.7875000000000014,
    1.7937500000000011,
    1.8000000000000007,
    1.8062500000000004,
    1.8125,
    1.8187500000000014,
    1.8250000000000011,
    1.8312500000000007,
    1.8375000000000004,
    1.84375,
    1.8500000000000014,
    1.8562500000000011,
    1.8625000000000007,
    1.8687500000000004,
    1.875,
    1.8812500000000014,
    1.8875000000000011,
    1.8937500000000007,
    1.9000000000000004,
    1.90625,
    1.9125000000000014,
    1.9187500000000011,
    1.9250000000000007,
    1.9312500000000004,
    1.9375,
    1.9437500000000014,
    1.9500000000000011,
    1.9562500000000007,
    1.9625000000000004,
    1.96875,
    1.9750000000000014,
    1.9812500000000011,
    1.9875000000000007,
    1.9937500000000004,
    2,
    2.0062500000000014,
    2.0125000000000011,
    2.0187500000000007,
    2.0250000000000004,
    2.03125,
    2.0375000000000014,
    2.0437500000000011,
    2.0500000000000007,
    2.0562500000000004,
    2.0625,
    2.0687500000000014,
    2.0750000000000011,
    2.0812500000000007,
    2.0875000000000004,
    2.09375,
    2.1000000000000014,
    2.1062500000000011,
    2.1125000000000007,
    2.1187500000000004,
    2.125,
    2.1312500000000014,
    2.1375000000000011,
    2.1437500000000007,
    2.1500000000000004,
    2.15625,
    2.1625000000000014,
    2.1687500000000011,
    2.1750000000000007,
    2.1812500000000004,
    2.1875,
    2.1937500000000014,
    2.2000000000000011,
    2.2062500000000007,
    2.2125000000000004,
    2.21875,
    2.2250000000000014,
    2.2312500000000011,
    2.2375000000000007,
    2.2437500000000004,
    2.25,
    2.2562500000000014,
    2.2625000000000011,
    2.2687500000000007,
    2.2750000000000004,
    2.28125,
    2.2875000000000014,
    2.2937500000000011,
    2.3000000000000007,
    2.3062500000000004,
    2.3125,
    2.3187500000000014,
    2.3250000000000011,
    2.3312500000000007,
    2.3375000000000004,
    2.34375,
    2.3500000000000014,
    2.3562500000000011,
    2.3625000000000007,
    2.3687500000000004,
    2.375,
    2.3812500000000014,
    2.3875000000000011,
    2.3937500000000007,
    2.4000000000000004,
    2.40625,
    2.4125000000000014,
    2.4187500000000011,
    2.4250000000000007,
    2.4312500000000004,
    2.4375,
    2.4437500000000014,
    2.4500000000000011,
    2.4562500000000007,
    2.4625000000000004,
    2.46875,
    2.4750000000000014,
    2.4812500000000011,
    2.4875000000000007,
    2.4937500000000004,
    2.5,
    2.5062500000000014,
    2.5125000000000011,
    2.5187500000000007,
    2.5250000000000004,
    2.53125,
    2.5375000000000014,
    2.5437500000000011,
    2.5500000000000007,
    2.5562500000000004,
    2.5625,
    2.5687500000000014,
    2.5750000000000011,
    2.5812500000000007,
    2.5875000000000004,
    2.59375,
    2.6000000000000014,
    2.6062500000000011,
    2.6125000000000007,
    2.6187500000000004,
    2.625,
    2.6312500000000014,
    2.6375000000000011,
    2.6437500000000007,
    2.6500000000000004,
    2.65625,
    2.6625000000000014,
    2.6687500000000011,
    2.6750000000000007,
    2.6812500000000004,
    2.6875,
    2.6937500000000014,
    2.7000000000000011,
    2.7062500000000007,
    2.7125000000000004,
    2.71875,
    2.7250000000000014,
    2.7312500000000011,
    2.7375000000000007,
    2.7437500000000004,
    2.75,
    2.7562500000000014,
    2.7625000000000011,
    2.7687500000000007,
    2.7750000000000004,
    2.78125,
    2.7875000000000014,
    2.7937500000000011,
    2.8000000000000007,
    2.8062500000000004,
    2.8125,
    2.8187500000000014,
    2.8250000000000011,
    2.8312500000000007,
    2.8375000000000004,
    2.84375,
    2.8500000000000014,
    2.8562500000000011,
    2.8625000000000007,
    2.8687500000000004,
    2.875,
    2.8812500000000014,
    2.8875000000000011,
    2.8937500000000007,
    2.9000000000000004,
    2.90625,
    2.9125000000000014,
    2.9187500000000011,
    2.9250000000000007,
    2.9312500000000004,
    2.9375,
    2.9437500000000014,
    2.9500000000000011,
    2.9562500000000007,
    2.9625000000000004,
    2.96875,
    2.9750000000000014,
    2.9812500000000011,
    2.9875000000000007,
    2.9937500000000004,
    3,
    3.0062500000000014,
    3.0125000000000011,
    3.0187500000000007,
    3.0250000000000004,
    3.03125,
    3.0375000000000014,
    3.0437500000000011,
    3.0500000000000007,
    3.0562500000000004,
    3.0625,
    3.0687500000000014,
    3.0750000000000011,
    3.0812500000000007,
    3.0875000000000004,
    3.09375,
    3.1000000000000014,
    3.1062500000000011,
    3.1125000000000007,
    3.1187500000000004,
    3.125,
    3.1312500000000014,
    3.1375000000000011,
    3.1437500000000007,
    3.1500000000000004,
    3.15625,
    3.1625000000000014,
    3.1687500000000011,
    3.1750000000000007,
    3.1812500000000004,
    3.1875,
    3.1937500000000014,
    3.2000000000000011,
    3.2062500000000007,
    3.2125000000000004,
    3.21875,
    3.2250000000000014,
    3.2312500000000011,
    3.2375000000000007,
    3.2437500000000004,
    3.25,
    3.2562500000000014,
    3.2625000000000011,
    3.2687500000000007,
    3.2750000000000004,
    3.28125,
    3.2875000000000014,
    3.2937500000000011,
    3.3000000000000007,
    3.3062500000000004,
    3.3125,
    3.3187500000000014,
    3.3250000000000011,
    3.3312500000000007,
    3.3375000000000004,
    3.34375,
    3.3500000000000014,
    3.3562500000000011,
    3.3625000000000007,
    3.3687500000000004,
    3.375,
    3.3812500000000014,
    3.3875000000000011,
    3.3937500000000007,
    3.4000000000000004,
    3.40625,
    3.4125000000000014,
    3.4187500000000011,
    3.4250000000000007,
    3.4312500000000004,
    3.4375,
    3.4437500000000014,
    3.4500000000000011,
    3.4562500000000007,
    3.4625000000000004,
    3.46875,
    3.4750000000000014,
    3.4812500000000011,
    3.4875000000000007,
    3.4937500000000004,
    3.5,
    3.5062500000000014,
    3.5125000000000011,
    3.5187500000000007,
    3.5250000000000004,
    3.53125,
    3.5375000000000014,
    3.5437500000000011,
    3.5500000000000007,
    3.5562500000000004,
    3.5625,
    3.5687500000000014,
    3.5750000000000011,
    3.5812500000000007,
    3.5875000000000004,
    3.59375,
    3.6000000000000014,
    3.6062500000000011,
    3.6125000000000007,
    3.6187500000000004,
    3.625,
    3.6312500000000014,
    3.6375000000000011,
    3.6437500000000007,
    3.6500000000000004,
    3.65625,
    3.6625000000000014,
    3.6687500000000011,
    3.6750000000000007,
    3.6812500000000004,
    3.6875,
    3.6937500000000014,
    3.7000000000000011,
    3.7062500000000007,
    3.7125000000000004,
    3.71875,
    3.7250000000000014,
    3.7312500000000011,
    3.7375000000000007,
    3.7437500000000004,
    3.75,
    3.7562500000000014,
    3.7625000000000011,
    3.7687500000000007,
    3.7750000000000004,
    3.78125,
    3.7875000000000014,
    3.7937500000000011,
    3.8000000000000007,
    3.8062500000000004,
    3.8125,
    3.8187500000000014,
    3.8250000000000011,
    3.8312500000000007,
    3.8375000000000004,
    3.84375,
    3.8500000000000014,
    3.8562500000000011,
    3.8625000000000007,
    3.8687500000000004,
    3.875,
    3.8812500000000014,
    3.8875000000000011,
    3.8937500000000007,
    3.9000000000000004,
    3.90625,
    3.9125000000000014,
    3.9187500000000011,
    3.9250000000000007,
    3.9312500000000004,
    3.9375,
    3.9437500000000014,
    3.9500000000000011,
    3.9562500000000007,
    3.9625000000000004,
    3.96875,
    3.9750000000000014,
    3.9812500000000011,
    3.9875000000000007,
    3.9937500000000004,
    4,
    4.0062500000000014,
    4.0125000000000011,
    4.0187500000000007,
    4.0250000000000004,
    4.03125,
    4.0375000000000014,
    4.0437500000000011,
    4.0500000000000007,
    4.0562500000000004,
    4.0625,
    4.0687500000000014,
    4.0750000000000011,
    4.0812500000000007,
    4.0875000000000004,
    4.09375,
    4.1000000000000014,
    4.1062500000000011,
    4.1125000000000007,
    4.1187500000000004,
    4.125,
    4.1312500000000014,
    4.1375000000000011,
    4.1437500000000007,
    4.1500000000000004,
    4.15625,
    4.1625000000000014,
    4.1687500000000011,
    4.1750000000000007,
    4.1812500000000004,
    4.1875,
    4.1937500000000014,
    4.2000000000000011,
    4.2062500000000007,
    4.2125000000000004,
    4.21875,
    4.2250000000000014,
    4.2312500000000011,
    4.2375000000000007,
    4.2437500000000004,
    4.25,
    4.2562500000000014,
    4.2625000000000011,
    4.2687500000000007,
    4.2750000000000004,
    4.28125,
    4.2875000000000014,
    4.2937500000000011,
    4.3000000000000007,
    4.3062500000000004,
    4.3125,
    4.3187500000000014,
    4.3250000000000011,
    4.3312500000000007,
    4.3375000000000004,
    4.34375,
    4.3500000000000014,
    4.3562500000000011,
    4.3625000000000007,
    4.3687500000000004,
    4.375,
    4.3812500000000014,
    4.3875000000000011,
    4.3937500000000007,
    4.4000000000000004,
    4.40625,
    4.4125000000000014,
    4.4187500000000011,
    4.4250000000000007,
    4.4312500000000004,
    4.4375,
    4.4437500000000014,
    4.4500000000000011,
    4.4562500000000007,
    4.4625000000000004,
    4.46875,
    4.4750000000000014,
    4.4812500000000011,
    4.4875000000000007,
    4.4937500000000004,
    4.5,
    4.5062500000000014,
    4.5125000000000011,
    4.5187500000000007,
    4.5250000000000004,
    4.53125,
    4.5375000000000014,
    4.5437500000000011,
    4.5500000000000007,
    4.5562500000000004,
    4.5625,
    4.5687500000000014,
    4.5750000000000011,
    4.5812500000000007,
    4.5875000000000004,
    4.59375,
    4.6000000000000014,
    4.6062500000000011,
    4.6125000000000007,
    4.6187500000000004,
    4.625,
    4.6312500000000014,
    4.6375000000000011,
    4.6437500000000007,
    4.6500000000000004,
    4.65625,
    4.6625000000000014,
    4.6687500000000011,
    4.6750000000000007,
    4.6812500000000004,
    4.6875,
    4.6937500000000014,
    4.7000000000000011,
    4.7062500000000007,
    4.7125000000000004,
    4.71875,
    4.7250000000000014,
    4.7312500000000011,
    4.7375000000000007,
    4.7437500000000004,
    4.75,
    4.7562500000000014,
    4.7625000000000011,
    4.7687500000000007,
    4.7750000000000004,
    4.78125,
    4.7875000000000014,
    4.7937500000000011,
    4.8000000000000007,
    4.8062500000000004,
    4.8125,
    4.8187500000000014,
    4.8250000000000011,
    4.8312500000000007,
    4.8375000000000004,
    4.84375,
    4.8500000000000014,
    4.8562500000000011,
    4.8625000000000007,
    4.8687500000000004,
    4.875,
    4.8812500000000014,
    4.8875000000000011,
    4.8937500000000007,
    4.9000000000000004,
    4.90625,
    4.9125000000000014,
    4.9187500000000011,
    4.9250000000000007,
    4.9312500000000004,
    4.9375,
    4.9437500000000014,
    4.9500000000000011,
    4.9562500000000007,
    4.9625000000000004,
    4.96875,
    4.9750000000000014,
    4.9812500000000011,
    4.9875000000000007,
    4.9937500000000004,
    5,
    5.0062500000000014,
    5.0125000000000011,
    5.0187500000000007,
    5.0250000000000004,
    5.03125,
    5.0375000000000014,
    5.0437500000000011,
    5.0500000000000007,
    5.0562500000000004,
    5.0625,
    5.0687500000000014,
    5.0750000000000011,
    5.0812500000000007,
    5.0875000000000004,
    5.09375,
    5.1000000000000014,
    5.1062500000000011,
    5.1125000000000007,
    5.1187500000000004,
    5.125,
    5.1312500000000014,
    5.1375000000000011,
    5.1437500000000007,
    5.1500000000000004,
    5.15625,
    5.1625000000000014,
    5.1687500000000011,
    5.1750000000000007,
    5.1812500000000004,
    5.1875,
    5.1937500000000014,
    5.2000000000000011,
    5.2062500000000007,
    5.2125000000000004,
    5.21875,
    5.2250000000000014,
    5.2312500000000011,
    5.2375000000000007,
    5.2437500000000004,
    5.25,
    5.2562500000000014,
    5.2625000000000011,
    5.2687500000000007,
    5.2750000000000004,
    5.28125,
    5.2875000000000014,
    5.2937500000000011,
    5.3000000000000007,
    5.3062500000000004,
    5.3125,
    5.3187500000000014,
    5.3250000000000011,
    5.3312500000000007,
    5.3375000000000004,
    5.34375,
    5.3500000000000014,
    5.3562500000000011,
    5.3625000000000007,
    5.3687500000000004,
    5.375,
    5.3812500000000014,
    5.3875000000000011,
    5.3937500000000007,
    5.4000000000000004,
    5.40625,
    5.4125000000000014,
    5.4187500000000011,
    5.4250000000000007,
    5.4312500000000004,
    5.4375,
    5.4437500000000014,
    5.4500000000000011,
    5.4562500000000007,
    5.4625000000000004,
    5.46875,
    5.4750000000000014,
    5.4812500000000011,
    5.4875000000000007,
    5.4937500000000004,
    5.5,
    5.5062500000000014,
    5.5125000000000011,
    5.5187500000000007,
    5.5250000000000004,
    5.53125,
    5.5375000000000014,
    5.5437500000000011,
    5.5500000000000007,
    5.5562500000000004,
    5.5625,
    5.5687500000000014,
    5.5750000000000011,
    5.5812500000000007,
    5.5875000000000004,
    5.59375,
    5.6000000000000014,
    5.6062500000000011,
    5.6125000000000007,
    5.6187500000000004,
    5.625,
    5.6312500000000014,
    5.6375000000000011,
    5.6437500000000007,
    5.6500000000000004,
    5.65625,
    5.6625000000000014,
    5.6687500000000011,
    5.6750000000000007,
    5.6812500000000004,
    5.6875,
    5.6937500000000014,
    5.7000000000000011,
    5.7062500000000007,
    5.7125000000000004,
    5.71875,
    5.7250000000000014,
    5.7312500000000011,
    5.7375000000000007,
    5.7437500000000004,
    5.75,
    5.7562500000000014,
    5.7625000000000011,
    5.7687500000000007,
    5.7750000000000004,
    5.78125,
    5.7875000000000014,
    5.7937500000000011,
    5.8000000000000007,
    5.8062500000000004,
    5.8125,
    5.8187500000000014,
    5.8250000000000011,
    5.8312500000000007,
    5.8375000000000004,
    5.84375,
    5.8500000000000014,
    5.8562500000000011,
    5.8625000000000007,
    5.8687500000000004,
    5.875,
    5.8812500000000014,
    5.8875000000000011,
    5.8937500000000007,
    5.9000000000000004,
    5.90625,
    5.9125000000000014,
    5.9187500000000011,
    5.9250000000000007,
    5.9312500000000004,
    5.9375,
    5.9437500000000014,
    5.9500000000000011,
    5.9562500000000007,
    5.9625000000000004,
    5.96875,
    5.9750000000000014,
    5.9812500000000011,
    5.9875000000000007,
    5.9937500000000004,
    6,
};

inline constexpr double kCdf[] = {
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    4.1666319447337938e-06,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    1.2499895834201382e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.0833159723668968e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    2.9166423613136558e-05,
    3.7499687502604144e-05,
    5.4166215281539323e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    6.2499479171006909e-05,
    7.0832743060474495e-05,
    7.0832743060474495e-05,
    7.0832743060474495e-05,
    7.0832743060474495e-05,
    7.0832743060474495e-05,
    7.9166006949942081e-05,
    7.9166006949942081e-05,
    7.9166006949942081e-05,
    7.9166006949942081e-05,
    7.9166006949942081e-05,
    7.9166006949942081e-05,
    7.9166006949942081e-05,
    7.9166006949942081e-05,
    8.7499270839409667e-05,
    9.5832534728877266e-05,
    9.5832534728877266e-05,
    9.5832534728877266e-05,
    9.5832534728877266e-05,
    9.5832534728877266e-05,
    9.5832534728877266e-05,
    0.00010416579861834485,
    0.00011249906250781244,
    0.00012083232639728002,
    0.00012083232639728002,
    0.00012916559028674761,
    0.00012916559028674761,
    0.00012916559028674761,
    0.00015416538195515037,
    0.00016249864584461795,
    0.00017083190973408554,
    0.00017916517362355313,
    0.00018749843751302071,
    0.00018749843751302071,
    0.00019583170140248833,
    0.00019583170140248833,
    0.00019583170140248833,
    0.00019583170140248833,
    0.00020416496529195591,
    0.00020416496529195591,
    0.00020416496529195591,
    0.0002124982291814235,
    0.0002124982291814235,
    0.0002124982291814235,
    0.0002124982291814235,
    0.0002124982291814235,
    0.00022083149307089108,
    0.00022083149307089108,
    0.00023749802084982626,
    0.00026249781251822901,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00027916434029716419,
    0.00029583086807609936,
    0.00030416413196556694,
    0.00030416413196556694,
    0.0003291639236339697,
    0.00034583045141290487,
    0.00034583045141290487,
    0.00035416371530237246,
    0.00037916350697077522,
    0.00039583003474971044,
    0.00039583003474971044,
    0.00039583003474971044,
    0.00040416329863917803,
    0.0004208298264181132,
    0.00042916309030758079,
    0.00042916309030758079,
    0.00044582961808651596,
    0.00045416288197598355,
    0.0004791626736443863,
    0.00049582920142332142,
    0.00052082899309172429,
    0.00053749552087065946,
    0.00054582878476012705,
    0.00055416204864959463,
    0.00055416204864959463,
    0.0005708285764285298,
    0.00059582836809693256,
    0.00061249489587586773,
    0.00062082815976533532,
    0.00063749468754427049,
    0.00066249447921267325,
    0.00066249447921267325,
    0.00067082774310214084,
    0.00067916100699160842,
    0.00069582753477054359,
    0.00072082732643894635,
    0.00072082732643894635,
    0.00073749385421788152,
    0.0007541603819968167,
    0.00076249364588628428,
    0.00078749343755468704,
    0.0008124932292230898,
    0.00082915975700202497,
    0.00086249281255989531,
    0.0008708260764493629,
    0.00092082565978616842,
    0.00096249197923350635,
    0.00098749177090190921,
    0.0010041582986808444,
    0.001029158090349247,
    0.0010458246181281822,
    0.0010624911459071174,
    0.0010708244097965851,
    0.0010958242014649877,
    0.0011124907292439229,
    0.0011291572570228581,
    0.0011624903125807284,
    0.0011791568403596636,
    0.0012041566320280664,
    0.0012124898959175339,
    0.0012208231598070016,
    0.0012208231598070016,
    0.0012374896875859368,
    0.0012624894792543394,
    0.0012708227431438071,
    0.0012874892709227423,
    0.0013208223264806127,
    0.0013624886459279507,
    0.0014124882292647562,
    0.0014208214931542237,
    0.001454154548712094,
    0.0014624878126015617,
    0.0015041541320488995,
    0.0015541537153857051,
    0.0015874867709435754,
    0.0016041532987225106,
    0.0016374863542803809,
    0.0016624861459487838,
    0.001679152673727719,
    0.0017124857292855893,
    0.001737485520953992,
    0.0017708185765118623,
    0.0017958183681802652,
    0.0018291514237381355,
    0.0018541512154065384,
    0.0019041507987433439,
    0.0019541503820801492,
    0.0020041499654169549,
    0.0020374830209748253,
    0.0020874826043116306,
    0.002104149132090566,
    0.0021541487154273713,
    0.0022374813543220473,
    0.0022874809376588526,
    0.0023208139932167234,
    0.0023958133682219314,
    0.002462479479337672,
    0.0025208123265639455,
    0.0025708119099007508,
    0.0026208114932375565,
    0.0026541445487954268,
    0.0027041441321322321,
    0.0027708102432479728,
    0.0028291430904742463,
    0.0028791426738110516,
    0.0029541420488162599,
    0.0030124748960425329,
    0.0030874742710477413,
    0.003154140382163482,
    0.0032041399655002873,
    0.0032624728127265607,
    0.0033291389238423014,
    0.0033958050349580421,
    0.0034708044099632505,
    0.0035124707294105881,
    0.0036541362155315372,
    0.0036958025349788752,
    0.0037458021183156805,
    0.0038291347572103566,
    0.003904134132215565,
    0.0040207998266681109,
    0.0040791326738943839,
    0.0041291322572311901,
    0.0041957983683469308,
    0.0043124640627994768,
    0.0044207964933625551,
    0.0045124623961466988,
    0.0046207948267097771,
    0.0046957942017149855,
    0.0047541270489412585,
    0.0048291264239464669,
    0.0049291255906200784,
    0.0050374580211831567,
    0.005112457396188365,
    0.005229123090640911,
    0.0053457887850934579,
    0.0054457879517670685,
    0.0055124540628828092,
    0.0056374530212248228,
    0.0056957858684510958,
    0.005804118299014175,
    0.0059124507295772533,
    0.0059957833684719294,
    0.0060957825351455408,
    0.0061541153823718138,
    0.0062707810768243598,
    0.0064124465629453089,
    0.0064541128823926465,
    0.0066041116324030633,
    0.0067207773268556092,
    0.006870776076866026,
    0.006929108924092299,
    0.0070041082990975074,
    0.0070791076741027158,
    0.0072374396880026002,
    0.0073957717019024838,
    0.0074874376046866276,
    0.0075707702435813037,
    0.0076041032991391736,
    0.0077207689935917204,
    0.0078457679519337332,
    0.0079874334380546832,
    0.0081207656602861646,
    0.0082790976741860482,
    0.0084624294797543357,
    0.0085874284380963485,
    0.0087790935075541029,
    0.0088957592020066506,
    0.0090207581603486634,
    0.0091040907992433404,
    0.0092457562853642886,
    0.0093540887159273677,
    0.0095624203131640575,
    0.0097124190631744742,
    0.0098124182298480848,
    0.009979083507637437,
    0.010095749202089983,
    0.010270747743768802,
    0.010420746493779219,
    0.010545745452121232,
    0.010729077257689519,
    0.010937408854926209,
    0.011204073299389172,
    0.011312405729952251,
    0.011454071216073199,
    0.011670736077199357,
    0.011862401146657112,
    0.011970733577220189,
    0.012087399271672737,
    0.012229064757793685,
    0.012404063299472504,
    0.012595728368930258,
    0.012787393438388013,
    0.012979058507845767,
    0.013154057049524588,
    0.013337388855092874,
    0.013537387188440097,
    0.013720718994008384,
    0.013945717119024007,
    0.014179048507929101,
    0.014404046632944725,
    0.014637378021849818,
    0.014945708785760119,
    0.015195706702444146,
    0.015445704619128173,
    0.015654036216364863,
    0.015895700869159424,
    0.016062366146948774,
    0.016337363855301205,
    0.016645694619211508,
    0.016870692744227131,
    0.017112357397021691,
    0.017412354897042525,
    0.017637353022058148,
    0.017904017466521111,
    0.018212348230431413,
    0.018487345938783845,
    0.018837343022141483,
    0.019095674202714977,
    0.019429004758293681,
    0.01967900267497771,
    0.019995666702777477,
    0.020378996841692986,
    0.020737327188940093,
    0.021045657952850391,
    0.021420654827876435,
    0.021695652536228866,
    0.022020649827918102,
    0.022412313230723076,
    0.02282064316130699,
    0.023128973925217289,
    0.023595636703027476,
    0.023970633578053516,
    0.024295630869742752,
    0.024595628369763586,
    0.025045624619794836,
    0.025353955383705135,
    0.025703952467062776,
    0.026070616078199348,
    0.026370613578220181,
    0.026745610453246221,
    0.027062274481045992,
    0.027428938092182564,
    0.027878934342213814,
    0.028195598370013585,
    0.028628928092265898,
    0.0289372588561762,
    0.029353922050649579,
    0.029720585661786151,
    0.030162248647927933,
    0.030587245106290781,
    0.031020574828543094,
    0.031545570453579551,
    0.031937233856384528,
    0.03236223031474738,
    0.032745560453662885,
    0.033203889967583604,
    0.033620553162056983,
    0.033995550037083024,
    0.034462212814893207,
    0.03501220823159807,
    0.035495537537187191,
    0.035870534412213231,
    0.036287197606686611,
    0.036862192815059876,
    0.037395521703985801,
    0.037845517954017048,
    0.038303847467937767,
    0.038670511079074342,
    0.039137173856884526,
    0.039512170731910566,
    0.039862167815268204,
    0.04033716385696786,
    0.040878826009783251,
    0.041428821426488113,
    0.04187881767651936,
    0.042503812468229429,
    0.043020474829376425,
    0.043520470662744476,
    0.044020466496112534,
    0.044645461287822603,
    0.045112124065632787,
    0.045728785593453385,
    0.046270447746268782,
    0.046762110315747368,
    0.047428771426904777,
    0.047962100315830702,
    0.0485787618436513,
    0.049195423371471904,
    0.049920417329855582,
    0.050453746218781508,
    0.051120407329938916,
    0.051687069274422716,
    0.052303730802243313,
    0.052812059899500836,
    0.053420388163431969,
    0.054062049482920975,
    0.054620378163515303,
    0.055253706219114844,
    0.055903700802493315,
    0.056512029066424448,
    0.05732868892759227,
    0.058053682885975948,
    0.058703677469354419,
    0.0593786718444013,
    0.059953667052774558,
    0.060645327955600369,
    0.061470321080657662,
    0.06207031608069933,
    0.062795310039083008,
    0.063586970108582427,
    0.064411963233639721,
    0.065070291080907658,
    0.06567861934483879,
    0.066370280247664601,
    0.067103607469937751,
    0.067870267747768775,
    0.068703594136715521,
    0.06947858767843601,
    0.070186915109040751,
    0.070828576428529758,
    0.071636903025808121,
    0.072495229206423276,
    0.073378555178706839,
    0.074278547678769347,
    0.075086874276047696,
    0.075928533928883921,
    0.076778526845609624,
    0.077595186706777439,
    0.078378513512387393,
    0.079178506845776292,
    0.080070166081949321,
    0.080795160040332992,
    0.081753485387621769,
    0.082595145040457993,
    0.0834951375405205,
    0.084336797193356725,
    0.085203456637861358,
    0.086020116499029173,
    0.086895109207423271,
    0.087928433929717248,
    0.088686760943658807,
    0.089653419554837049,
    0.090628411429904757,
    0.091703402471646073,
    0.092736727193940049,
    0.093628386430113078,
    0.094761710319080678,
    0.095695035874701045,
    0.096811693235889701,
    0.097770018583178478,
    0.098686677611019902,
    0.099661669486087609,
    0.1004866626111449,
    0.10151998733343889,
    0.10246164615294873,
    0.10355330372246897,
    0.10471162740310497,
    0.10561161990316748,
    0.10663661136157199,
    0.10789493420888159,
    0.10907825768118599,
    0.11001158323680636,
    0.11112824059799502,
    0.11205323288972592,
    0.11331155573703552,
    0.11445321288989259,
    0.11556987025108124,
    0.11659486170948576,
    0.11774485212623229,
    0.11878651011241573,
    0.11991983400138333,
    0.12107815768201932,
    0.12223648136265532,
    0.12341147157107024,
    0.12435313039058007,
    0.12550312080732662,
    0.12661977816851527,
    0.12785310122415647,
    0.12901975816868191,
    0.13009474921042324,
    0.1312114065716119,
    0.13221139823834802,
    0.13310305747452106,
    0.13423638136348864,
    0.13536970525245623,
    0.13655302872476063,
    0.13778635178040183,
    0.13916134032216398,
    0.14011133240556328,
    0.14135298872509397,
    0.14260297830851409,
    0.14395296705860786,
    0.14524462296147533,
    0.14643627969766917,
    0.14778626844776294,
    0.14910292414229881,
    0.15047791268406097,
    0.15166956942025484,
    0.15285289289255924,
    0.15419454837876351,
    0.15563620303164141,
    0.15701952483729303,
    0.15851951233739719,
    0.15981950150415414,
    0.16121115657369522,
    0.16248614594878377,
    0.16377780185165122,
    0.16507779101840819,
    0.16649444587961768,
    0.16784443462971141,
    0.16920275664369464,
    0.17046941275489372,
    0.17196106699110841,
    0.17341105490787576,
    0.17492770893575887,
    0.176177698519179,
    0.17758602011649902,
    0.17902767476937692,
    0.18041932983891801,
    0.18180265164456963,
    0.18339430504745793,
    0.18472762726977277,
    0.18612761560320332,
    0.1875192706727444,
    0.18910259081174324,
    0.19064424463129473,
    0.19214423213139892,
    0.19373588553428722,
    0.1951525403954967,
    0.1967775268539429,
    0.19829418088182599,
    0.19966916942358814,
    0.20114415713202391,
    0.20276081032658061,
    0.20426913109057424,
    0.20573578553512054,
    0.20740243831301405,
    0.20888575928533928,
    0.21038574678544344,
    0.21184406796610028,
    0.21356072032733062,
    0.21507737435521371,
    0.21674402713310723,
    0.21845234623044807,
    0.21987733435554704,
    0.22129398921675653,
    0.22293564220298165,
    0.22462729477254356,
    0.22633561386988441,
    0.22796893359222006,
    0.22933558887009275,
    0.23093557553687052,
    0.23250222914809043,
    0.23428554762043649,
    0.23591053407888268,
    0.23759385338455513,
    0.23940217164856958,
    0.24109382421813152,
    0.24277714352380397,
    0.2445687952600395,
    0.24636044699627502,
    0.24812709894084217,
    0.2496104199131674,
    0.25141873817718186,
    0.25306039116340695,
    0.25476037699685838,
    0.25679369338588848,
    0.25857701185823451,
    0.26045199623336474,
    0.26222698144182133,
    0.26408529928917257,
    0.26581028491429237,
    0.26738527178940175,
    0.2692769226923109,
    0.27106024116465693,
    0.27283522637311358,
    0.27451021241489654,
    0.27623519804001634,
    0.2781685152623728,
    0.28012683227639767,
    0.28188515095707534,
    0.28396846692944228,
    0.2858934508879093,
    0.28733510554078717,
    0.28912675727702269,
    0.29090174248547929,
    0.29252672894392545,
    0.29441837984683461,
    0.29596003366638612,
    0.29801834984708458,
    0.29997666686110946,
    0.30175998533345555,
    0.30358497012524893,
    0.30550162081982651,
    0.30725160623661468,
    0.30896825859784499,
    0.31089324255631201,
    0.31255989533420553,
    0.31453487887600939,
    0.31645986283447636,
    0.31842651311239073,
    0.32029316422363147,
    0.32220981491820899,
    0.32403479971000243,
    0.32589311755735367,
    0.32747643769635254,
    0.32950142082149314,
    0.33159307005774952,
    0.33346805443287975,
    0.33526803943300471,
    0.33710969075257707,
    0.33903467471104409,
    0.34084299297505855,
    0.34288464262797808,
    0.34495962533645552,
    0.34675127707269104,
    0.34869292755893699,
    0.35074291047574602,
    0.35259289505920782,
    0.35458454512879062,
    0.35639286339280507,
    0.35821784818459845,
    0.3601594986708444,
    0.36213448221264821,
    0.36403446637944686,
    0.36590945075457704,
    0.36810109915750699,
    0.37014274881042658,
    0.3719344005466621,
    0.37408438263014476,
    0.37602603311639071,
    0.37800934992208396,
    0.37980100165831954,
    0.38164265297789185,
    0.3835843034641378,
    0.38558428679761003,
    0.3877259356172032,
    0.38967591936733859,
    0.39166756943692138,
    0.39343422138148848,
    0.39531753902050815,
    0.39720918992341731,
    0.39913417388188432,
    0.40093415888200934,
    0.40307580770160251,
    0.4051091240906326,
    0.40716744027133106,
    0.4091590903409138,
    0.41109240756327031,
    0.41308405763285305,
    0.41505904117465686,
    0.41693402554978709,
    0.41887567603603304,
    0.42102565811951564,
    0.42289230923075644,
    0.42504229131423904,
    0.42715894034216384,
    0.42895059207839936,
    0.43113390721743988,
    0.43309222423146476,
    0.43507554103715801,
    0.43690052582895145,
    0.43903384138465512,
    0.44095049207923265,
    0.44269214423213138,
    0.4447504604128299,
    0.44689210923242306,
    0.44910875742702144,
    0.45088374263547804,
    0.45285872617728185,
    0.45484204298297515,
    0.45699202506645775,
    0.45911700735827199,
    0.461308655761202,
    0.46335030541412153,
    0.46545862117815684,
    0.46731693902550814,
    0.46916692360896994,
    0.47130023916467362,
    0.47330855576203534,
    0.47518354013716552,
    0.47673352722060647,
    0.47872517729018926,
    0.48036683027641436,
    0.48222514812376566,
    0.48415013208223262,
    0.48615011541570485,
    0.48808343263806137,
    0.49015841534653876,
    0.49202506645777949,
    0.49386671777735186,
    0.49582503479137674,
    0.49780835159707004,
    0.49984166798610014,
    0.50168331930567245,
    0.50359163673636054,
    0.50562495312539057,
    0.50764993625053123,
    0.50967491937567189,
    0.51178323513970714,
    0.51370821909817421,
    0.51583320138998845,
    0.51781651819568175,
    0.51973316889025922,
    0.52159982000149996,
    0.5233831384738461,
    0.52524145632119734,
    0.52697477521020664,
    0.52911642402979975,
    0.53109974083549305,
    0.53290805909950756,
    0.53475804368296931,
    0.53679136007199935,
    0.53881634319714,
    0.54082465979450167,
    0.54274964375296875,
    0.54466629444754622,
    0.54672461062824473,
    0.54884125965616948,
    0.55060791160073663,
    0.55243289639253002,
    0.55420788160098666,
    0.55594953375388534,
    0.55780785160123669,
    0.55984950125415622,
    0.56163281972650225,
    0.56369113590720077,
    0.56561611986566773,
    0.56785776785193454,
    0.5697077524353964,
    0.57193273389388422,
    0.57385771785235118,
    0.57559103674136047,
    0.5773743552137065,
    0.57920767326938938,
    0.58119932333897217,
    0.58295764201964984,
    0.58492429229756415,
    0.58679094340880489,
    0.58848259597836683,
    0.59046591278406013,
    0.59235756368696924,
    0.5941158823676469,
    0.59582420146498782,
    0.59769085257622856,
    0.59968250264581124,
    0.60164081965983618,
    0.60347413771551905,
    0.6050741243822968,
    0.60704910792410061,
    0.60898242514645706,
    0.61091574236881363,
    0.61286572611894896,
    0.61466571111907398,
    0.61647402938308848,
    0.61826568111932401,
    0.62021566486945945,
    0.62204898292514232,
    0.62394896709194092,
    0.62581561820318166,
    0.62777393521720648,
    0.62959058674511048,
    0.63150723743968795,
    0.6331905567453604,
    0.63515720702327483,
    0.63687385938450514,
    0.63867384438463015,
    0.64055716202364976,
    0.64254881209323256,
    0.6442404646627945,
    0.64612378230181411,
    0.64794043382971811,
    0.64974875209373251,
    0.65149873751052079,
    0.6532153898717511,
    0.65480704327463934,
    0.65653202889975915,
    0.65838201348322101,
    0.6599403338305514,
    0.6617569853584554,
    0.66326530612244894,
    0.66504029133090559,
    0.66664861126157282,
    0.66849026258114519,
    0.67028191431738071,
    0.67212356563695308,
    0.67373188556762031,
    0.67534853876217693,
    0.6768485262622812,
    0.67867351105407459,
    0.68019016508195762,
    0.6818484845959617,
    0.68355680369330252,
    0.6852151232073066,
    0.68699844167965263,
    0.68864009466587783,
    0.69020674827709771,
    0.69199006674944374,
    0.69361505320788996,
    0.69529003924967292,
    0.69684002633311393,
    0.69856501195823373,
    0.70041499654169548,
    0.70217331522237314,
    0.70388996758360345,
    0.70550662077816018,
    0.70707327438938006,
    0.70873992716727363,
    0.71024824793126728,
    0.71191490070916075,
    0.71353155390371747,
    0.71489820918159019,
    0.71658152848726264,
    0.71811484904292466,
    0.71983150140415497,
    0.72141482154315384,
    0.72313147390438415,
    0.72464812793226718,
    0.72615644869626084,
    0.72778976841859655,
    0.72927308939092172,
    0.73071474404379966,
    0.73196473362721981,
    0.73359805334955541,
    0.73508970758577008,
    0.73661469487754272,
    0.73820634828043097,
    0.73948967091940898,
    0.74095632536395528,
    0.74228131432238065,
    0.74393963383638473,
    0.74555628703094146,
    0.74721460654494543,
    0.74873959383671806,
    0.75020624828126437,
    0.75156457029524759,
    0.75284789293422549,
    0.75426454779543506,
    0.75565620286497615,
    0.75697285855951202,
    0.75844784626794781,
    0.76010616578195178,
    0.76160615328205594,
    0.76304780793493387,
    0.76458946175448539,
    0.76580611828234768,
    0.76719777335188877,
    0.7685477621019825,
    0.7700144165465288,
    0.7713894050882909,
    0.77280605994950047,
    0.77413104890792572,
    0.77547270439413007,
    0.77692269231089739,
    0.77828101432488062,
    0.77970600244997956,
    0.78096432529728921,
    0.78228931425571457,
    0.78368096932525566,
    0.78531428904759126,
    0.78658927842267978,
    0.78783926800609994,
    0.7894309214089883,
    0.79068091099240845,
    0.79193923383971798,
    0.79320588995091712,
    0.79455587870101085,
    0.79593086724277295,
    0.79742252147898762,
    0.79878917675686034,
    0.80011416571528571,
    0.80155582036816364,
    0.80271414404879959,
    0.80398913342388811,
    0.80543912134065554,
    0.80663077807684935,
    0.80783076807693266,
    0.80906409113257394,
    0.81023074807709938,
    0.81143907134107218,
    0.81278906009116592,
    0.81402238314680708,
    0.81540570495245868,
    0.81683069307755773,
    0.81793068391096746,
    0.81895567536937197,
    0.82013899884167629,
    0.82146398780010166,
    0.82267231106407446,
    0.82393896717527348,
    0.82503895800868321,
    0.82631394738377184,
    0.82747227106440779,
    0.82868892759227009,
    0.82978058516179032,
    0.83082224314797382,
    0.83172223564803627,
    0.83288889259256171,
    0.83421388155098708,
    0.83540553828718089,
    0.83649719585670124,
    0.8376471862734477,
    0.83873884384296793,
    0.83967216939858835,
    0.84081382655144543,
    0.84198048349597088,
    0.84323047307939103,
    0.84414713210723247,
    0.84518045682952647,
    0.84618044849626251,
    0.84731377238523009,
    0.84829709752418725,
    0.84927208939925503,
    0.85030541412154903,
    0.85133873884384292,
    0.85244706294114214,
    0.85349705419121502,
    0.85450537912184066,
    0.85548037099690832,
    0.85641369655252875,
    0.85728035599703334,
    0.85824701460821162,
    0.85928867259439501,
    0.86046366280280995,
    0.86166365280289325,
    0.86256364530295582,
    0.86343030474746041,
    0.86450529578920177,
    0.86540528828926422,
    0.86633028058099515,
    0.86717194023383137,
    0.86823859801168324,
    0.86923025641452989,
    0.87010524912292397,
    0.8710385746785444,
    0.87201356655361206,
    0.87294689210923238,
    0.87383855134540545,
    0.87469687752602066,
    0.87564686960941995,
    0.87661352822059813,
    0.87752185398455018,
    0.87846351280405999,
    0.87928017266522784,
    0.88014683210973244,
    0.88108849092924224,
    0.88193848384596796,
    0.88286347613769889,
    0.88375513537387185,
    0.88456346197115021,
    0.88547178773510216,
    0.88633844717960686,
    0.88729677252689565,
    0.88808009933250553,
    0.88900509162423647,
    0.88973008558262012,
    0.89057174523545635,
    0.89143840467996105,
    0.89236339697169187,
    0.893113390721744,
    0.89396338363846972,
    0.89476337697185859,
    0.8955383705135791,
    0.89627169773585225,
    0.89708835759701999,
    0.89788835093040886,
    0.89883000974991878,
    0.89964666961108652,
    0.90052166231948072,
    0.90137998850009582,
    0.90205498287514274,
    0.90278831009741589,
    0.90336330530578912,
    0.90418829843084636,
    0.90498829176423534,
    0.90557162023649806,
    0.9063132807226606,
    0.90704660794493375,
    0.90766326947275444,
    0.90827159773668553,
    0.90904659127840604,
    0.90975491870901071,
    0.91047991266739448,
    0.91114657377855179,
    0.91193823384805128,
    0.91271322738977179,
    0.9134715544037133,
    0.91418821509820747,
    0.91489654252881225,
    0.91558820343163805,
    0.91627986433446384,
    0.91702152482062649,
    0.91759652002899972,
    0.91808818259847835,
    0.91880484329297252,
    0.91957150357080353,
    0.92024649794585045,
    0.92101315822368146,
    0.92152982058482846,
    0.92210481579320169,
    0.92280480995991698,
    0.9233964716960692,
    0.92392146732110569,
    0.92456312864059464,
    0.92524645627953095,
    0.92582978475179378,
    0.92631311405738281,
    0.92695477537687188,
    0.92745477121023989,
    0.92797976683527639,
    0.92863809468254432,
    0.92927142273814389,
    0.92977141857151191,
    0.93027141440487993,
    0.93077974350213744,
    0.93135473871051078,
    0.93191306739110502,
    0.93239639669669416,
    0.93294639211339903,
    0.93363805301622482,
    0.93405471621069824,
    0.93453804551628739,
    0.93509637419688174,
    0.93561303655802863,
    0.93613803218306513,
    0.93682135982200143,
    0.93733802218314843,
    0.93787135107207442,
    0.93838801343322142,
    0.93893800884992629,
    0.93949633753052053,
    0.93985466787776772,
    0.94055466204448301,
    0.94103799135007205,
    0.94148798760010333,
    0.9420213164890292,
    0.94232964725293955,
    0.94282964308630757,
    0.94333797218356519,
    0.9438379680169332,
    0.94432129732252235,
    0.94486295947533772,
    0.94523795635036378,
    0.94564628628094771,
    0.94608794926708939,
    0.94653794551712067,
    0.94692127565603623,
    0.94749627086440946,
    0.94799626669777748,
    0.94848792926725611,
    0.94896292530895576,
    0.94947958767010276,
    0.94990458412846557,
    0.9503129140590495,
    0.95075457704519128,
    0.95111290739243837,
    0.9515129040591328,
    0.95188790093415887,
    0.95236289697585852,
    0.95278789343422143,
    0.95322955642036311,
    0.95356288697594183,
    0.9539295505870784,
    0.95433788051766233,
    0.95474621044824626,
    0.95517954017049855,
    0.95560453662886147,
    0.95602953308722427,
    0.95651286239281341,
    0.95697952517062357,
    0.95737118857342851,
    0.95776285197623356,
    0.95817118190681749,
    0.9585961783651803,
    0.95896284197631687,
    0.95929617253189559,
    0.95962116982358481,
    0.96000449996250026,
    0.96035449704585796,
    0.96071282739310504,
    0.96107949100424162,
    0.96142948808759932,
    0.96180448496262527,
    0.96214614878209348,
    0.96254614544878792,
    0.96283780968491928,
    0.96314614044882962,
    0.96341280489329251,
    0.96372113565720285,
    0.96406279947667106,
    0.96443779635169702,
    0.96481279322672309,
    0.96516279031008079,
    0.96547112107399102,
    0.96576278531012238,
    0.96608778260181161,
    0.96643777968516931,
    0.96673777718519016,
    0.96702110815743203,
    0.96735443871301074,
    0.96763776968525261,
    0.96786276781026825,
    0.96815443204639962,
    0.96843776301864148,
    0.96869609419921499,
    0.96902109149090421,
    0.96932942225481455,
    0.96958775343538806,
    0.96985441787985105,
    0.97012108232431393,
    0.97036274697710856,
    0.97068774426879778,
    0.97089607586603444,
    0.97112940725493957,
    0.97145440454662879,
    0.97165440287997595,
    0.97193773385221793,
    0.97217106524112296,
    0.9724793960050333,
    0.97278772676894354,
    0.97302939142173817,
    0.97327105607453268,
    0.97355438704677466,
    0.97381271822734805,
    0.97408771593570054,
    0.97431271406071618,
    0.97448771260239497,
    0.97473771051907898,
    0.97500437496354198,
    0.97528770593578384,
    0.97559603669969419,
    0.97588770093582555,
    0.97621269822751477,
    0.97644602961641991,
    0.97659602836643022,
    0.97684602628311434,
    0.97706269114424049,
    0.97726268947758765,
    0.97750435413038228,
    0.97768768593595057,
    0.97785435121373987,
    0.9780043499637503,
    0.97822934808876594,
    0.97845434621378158,
    0.97877101024158131,
    0.97900434163048644,
    0.9792043399638336,
    0.97942933808884924,
    0.97964600294997539,
    0.97984600128332267,
    0.98013766551945403,
    0.98033766385280119,
    0.98048766260281162,
    0.98072099399171675,
    0.98082099315839033,
    0.9810209914917376,
    0.98118765676952691,
    0.98138765510287418,
    0.98154598711677399,
    0.98175431871401075,
    0.98201264989458426,
    0.98211264906125784,
    0.982312647394605,
    0.98244597961683655,
    0.98269597753352056,
    0.98286264281130986,
    0.98302097482520978,
    0.98318764010299919,
    0.98332930558912013,
    0.98342097149190422,
    0.98350430413079892,
    0.98367096940858822,
    0.98382930142248814,
    0.98405429954750379,
    0.98417929850584573,
    0.98439596336697199,
    0.98458762843642966,
    0.98470429413088223,
    0.98487095940867164,
    0.98500429163090308,
    0.98517095690869239,
    0.98535428871426067,
    0.98549595420038172,
    0.98560428663094479,
    0.98573761885317623,
    0.98584595128373931,
    0.98598761676986024,
    0.98617928183931802,
    0.98630428079765997,
    0.98641261322822305,
    0.98655427871434409,
    0.98670427746435452,
    0.9868042766310281,
    0.98688760926992281,
    0.98703760801993312,
    0.98713760718660681,
    0.98727093940883826,
    0.98742093815884868,
    0.98752093732552226,
    0.98763760301997483,
    0.98777093524220627,
    0.98788760093665884,
    0.98799593336722191,
    0.98812093232556397,
    0.98822093149223755,
    0.98831259739502175,
    0.98842926308947421,
    0.98859592836726362,
    0.98868759427004771,
    0.98883759302005814,
    0.98900425829784755,
    0.9891292572561895,
    0.98926258947842105,
    0.98940425496454198,
    0.98957925350622078,
    0.98968758593678385,
    0.98977091857567856,
    0.98989591753402051,
    0.9899959167006942,
    0.99006258281180992,
    0.99015424871459401,
    0.99027091440904658,
    0.99038758010349914,
    0.9905125790618412,
    0.99064591128407264,
    0.99070424413129887,
    0.99076257697852521,
    0.99082924308964093,
    0.99090424246464615,
    0.99097924183965136,
    0.99102924142298809,
    0.9911125740618828,
    0.99117924017299852,
    0.99121257322855638,
    0.99132090565911946,
    0.99139590503412467,
    0.99156257031191408,
    0.9916292364230298,
    0.99171256906192451,
    0.99182090149248758,
    0.99192923392305066,
    0.99203756635361373,
    0.99208756593695058,
    0.99221256489529253,
    0.99225423121473988,
    0.99236256364530295,
    0.99243756302030817,
    0.99252922892309225,
    0.99266256114532381,
    0.99273756052032902,
    0.99280422663144474,
    0.99289589253422883,
    0.99297089190923404,
    0.99304589128423926,
    0.9930958908675761,
    0.99317089024258132,
    0.99323755635369704,
    0.99328755593703388,
    0.99341255489537583,
    0.99343755468704431,
    0.99347088774260217,
    0.99354588711760738,
    0.99359588670094412,
    0.99365421954817046,
    0.99370421913150719,
    0.99377088524262303,
    0.99382088482595976,
    0.99392921725652283,
    0.99397088357597019,
    0.99405421621486489,
    0.99409588253431225,
    0.99417088190931746,
    0.99423754802043318,
    0.99432921392321727,
    0.9943958800343331,
    0.9944708794093382,
    0.99451254572878556,
    0.99455421204823291,
    0.99458754510379077,
    0.99462921142323812,
    0.99471254406213283,
    0.9947375438538012,
    0.99477087690935906,
    0.9948208764926959,
    0.99487087607603275,
    0.99491254239547999,
    0.99496254197881684,
    0.99502920808993256,
    0.99507087440937991,
    0.99513754052049563,
    0.99516254031216411,
    0.99522920642327983,
    0.99527087274272719,
    0.99532087232606392,
    0.99538753843717964,
    0.99541253822884812,
    0.99545420454829547,
    0.99547920433996384,
    0.99552920392330069,
    0.99558753677052692,
    0.99562086982608478,
    0.99564586961775314,
    0.99566253614553213,
    0.99570420246497948,
    0.99574586878442684,
    0.99574586878442684,
    0.99578753510387419,
    0.99582086815943205,
    0.99584586795110042,
    0.99590420079832664,
    0.99592086732610563,
    0.99595420038166349,
    0.9960375330205582,
    0.99609586586778442,
    0.99613753218723178,
    0.99618753177056862,
    0.99619586503445801,
    0.99622086482612648,
    0.99627086440946322,
    0.99631253072891057,
    0.99637919684002629,
    0.99649586253447886,
    0.99652086232614723,
    0.99659586170115244,
    0.99663752802059979,
    0.99667919434004715,
    0.99675419371505236,
    0.99677086024283135,
    0.99682919309005757,
    0.9968958592011733,
    0.99697085857617851,
    0.99702919142340485,
    0.99704585795118372,
    0.99705419121507322,
    0.99707919100674158,
    0.99710419079841006,
    0.9971458571178573,
    0.99717919017341528,
    0.99721252322897314,
    0.99725418954842038,
    0.99727085607619936,
    0.99732085565953621,
    0.99734585545120458,
    0.99735418871509407,
    0.99737918850676244,
    0.9974041882984308,
    0.9974041882984308,
    0.99742918809009928,
    0.99747085440954664,
    0.99751252072899388,
    0.99757085357622022,
    0.99761251989566757,
    0.99761251989566757,
    0.99764585295122543,
    0.99769585253456217,
    0.99771251906234115,
    0.99773751885400952,
    0.997762518645678,
    0.99777918517345687,
    0.99780418496512524,
    0.99783751802068321,
    0.99786251781235158,
    0.99787085107624107,
    0.99790418413179893,
    0.99793751718735679,
    0.99795418371513567,
    0.99797085024291465,
    0.99799585003458302,
    0.99802918309014088,
    0.99805418288180936,
    0.99808751593736722,
    0.99811251572903559,
    0.99815418204848294,
    0.99817918184015131,
    0.99820418163181979,
    0.99822918142348815,
    0.99824584795126703,
    0.99828751427071438,
    0.99830418079849337,
    0.99832918059016174,
    0.99834584711794072,
    0.9983625136457196,
    0.99837084690960909,
    0.99838751343738807,
    0.99838751343738807,
    0.99841251322905644,
    0.9984458462846143,
    0.9984458462846143,
    0.99848751260406166,
    0.99851251239573002,
    0.99852917892350901,
    0.99852917892350901,
    0.99856251197906687,
    0.99857917850684574,
    0.99860417829851422,
    0.9986208448262931,
    0.99863751135407208,
    0.99866251114574045,
    0.99867917767351944,
    0.99869584420129831,
    0.99869584420129831,
    0.9987125107290773,
    0.99872917725685617,
    0.99872917725685617,
    0.99873751052074566,
    0.99876251031241403,
    0.99877917684019302,
    0.99878751010408251,
    0.99881250989575088,
    0.99882084315964037,
    0.99883750968741924,
    0.99884584295130874,
    0.99887084274297711,
    0.9988791760068666,
    0.99888750927075609,
    0.99889584253464558,
    0.99892084232631395,
    0.9989625086457613,
    0.99898750843742967,
    0.99899584170131916,
    0.99899584170131916,
    0.99900417496520866,
    0.99900417496520866,
    0.99901250822909804,
    0.99901250822909804,
    0.99901250822909804,
    0.99903750802076652,
    0.99904584128465601,
    0.99906250781243489,
    0.99907917434021387,
    0.99909584086799275,
    0.99910417413188224,
    0.99912917392355061,
    0.9991375071874401,
    0.99914584045132959,
    0.99916250697910847,
    0.99917084024299796,
    0.99917917350688745,
    0.99917917350688745,
    0.99917917350688745,
    0.99920417329855582,
    0.99922083982633481,
    0.99923750635411368,
    0.99924583961800317,
    0.99925417288189267,
    0.99926250614578216,
    0.99928750593745053,
    0.99929583920134002,
    0.99929583920134002,
    0.99929583920134002,
    0.99929583920134002,
    0.9993041724652294,
    0.99931250572911889,
    0.99932083899300839,
    0.99933750552078737,
    0.99933750552078737,
    0.99934583878467675,
    0.99935417204856625,
    0.99936250531245574,
    0.99937083857634523,
    0.99937917184023461,
    0.9993958383680136,
    0.9993958383680136,
    0.99940417163190309,
    0.99941250489579259,
    0.99941250489579259,
    0.99942917142357146,
    0.99943750468746095,
    0.99944583795135045,
    0.99946250447912932,
    0.99946250447912932,
    0.99948750427079769,
    0.99949583753468718,
    0.99949583753468718,
    0.99950417079857667,
    0.99950417079857667,
    0.99950417079857667,
    0.99950417079857667,
    0.99950417079857667,
    0.99951250406246617,
    0.99952917059024504,
    0.99954583711802403,
    0.9995625036458029,
    0.9995708369096924,
    0.99957917017358189,
    0.99959583670136087,
    0.99961250322913975,
    0.99961250322913975,
    0.99961250322913975,
    0.99961250322913975,
    0.99961250322913975,
    0.99961250322913975,
    0.99962083649302924,
    0.99962083649302924,
    0.99962083649302924,
    0.99962916975691873,
    0.99964583628469761,
    0.99964583628469761,
    0.99964583628469761,
    0.9996541695485871,
    0.9996541695485871,
    0.9996541695485871,
    0.9996541695485871,
    0.9996541695485871,
    0.9996541695485871,
    0.9996541695485871,
    0.99966250281247659,
    0.99966250281247659,
    0.99966250281247659,
    0.99966250281247659,
    0.99967916934025547,
    0.99968750260414496,
    0.99968750260414496,
    0.99968750260414496,
    0.99968750260414496,
    0.99969583586803445,
    0.99969583586803445,
    0.99969583586803445,
    0.99969583586803445,
    0.99969583586803445,
    0.99969583586803445,
    0.99969583586803445,
    0.99969583586803445,
    0.99969583586803445,
    0.99970416913192395,
    0.99971250239581333,
    0.99971250239581333,
    0.99971250239581333,
    0.99971250239581333,
    0.99971250239581333,
    0.99971250239581333,
    0.99972083565970282,
    0.99972083565970282,
    0.99972083565970282,
    0.99972083565970282,
    0.99972083565970282,
    0.99972083565970282,
    0.99972083565970282,
    0.99972916892359232,
    0.99972916892359232,
    0.99974583545137119,
    0.99976250197915018,
    0.99976250197915018,
    0.99976250197915018,
    0.99976250197915018,
    0.99976250197915018,
    0.99977083524303967,
    0.99977916850692916,
    0.99977916850692916,
    0.99977916850692916,
    0.99977916850692916,
    0.99978750177081854,
    0.99978750177081854,
    0.99979583503470804,
    0.99980416829859753,
    0.99981250156248702,
    0.99981250156248702,
    0.9998291680902659,
    0.9998291680902659,
    0.9998291680902659,
    0.99983750135415539,
    0.99983750135415539,
    0.99983750135415539,
    0.99983750135415539,
    0.99984583461804488,
    0.99985416788193426,
    0.99986250114582376,
    0.99986250114582376,
    0.99986250114582376,
    0.99987083440971325,
    0.99987083440971325,
    0.99987083440971325,
    0.99987083440971325,
    0.99987083440971325,
    0.99987083440971325,
    0.99987083440971325,
    0.99987083440971325,
    0.99987083440971325,
    0.99987916767360274,
    0.99988750093749224,
    0.99988750093749224,
    0.99988750093749224,
    0.99988750093749224,
    0.99988750093749224,
    0.99988750093749224,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99989583420138162,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.99990416746527111,
    0.9999125007291606,
    0.9999125007291606,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.9999208339930501,
    0.99992916725693948,
    0.99993750052082897,
    0.99993750052082897,
    0.99993750052082897,
    0.99993750052082897,
    0.99993750052082897,
    0.99993750052082897,
    0.99993750052082897,
    0.99993750052082897,
    0.99993750052082897,
    0.99993750052082897,
    0.99994583378471846,
    0.99994583378471846,
    0.99994583378471846,
    0.99995416704860796,
    0.99995416704860796,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997083357638683,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99997916684027632,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99998750010416582,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
    0.99999583336805531,
};

}  // namespace netgof::tw1_data
