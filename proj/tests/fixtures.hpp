#pragma once

// Published example matrices. GF(256) tables are alpha exponents; GF(16)
// tables are element text.

#include <vector>

namespace fixtures {

inline const std::vector<std::vector<int>> kGf256TopForward{
    {7, 234, 57, 156}, {37, 66, 55, 211}, {205, 100, 30, 86}, {227, 50, 149, 40}};
inline const std::vector<std::vector<int>> kGf256TopBackward{
    {136, 49, 235, 30}, {210, 77, 201, 198}, {144, 72, 52, 220}, {42, 228, 23, 248}};
inline const std::vector<std::vector<int>> kGf256FirstForward{
    {9, 43, 252, 70}, {232, 68, 92, 168}, {206, 213, 93, 230}, {34, 243, 61, 152}};
inline const std::vector<std::vector<int>> kGf256FirstBackward{
    {24, 137, 42, 223}, {66, 14, 88, 197}, {187, 35, 50, 25}, {128, 33, 214, 246}};
inline const std::vector<std::vector<int>> kGf256Involutory{
    {113, 33, 227, 93, 16, 174}, {63, 107, 186, 149, 175, 10}, {105, 34, 116, 97, 198, 197},
    {40, 66, 166, 43, 213, 52},  {136, 10, 185, 131, 5, 136},  {211, 17, 101, 142, 53, 56}};

inline constexpr const char* kGf16TopForward =
    "a^7 a^9 a^9 1\na^14 a^14 a^3 1\na^10 a^5 a^5 0\na^2 a^2 a^8 1\n";
inline constexpr const char* kGf16TopBackward =
    "0 a^7 1 a^7\n1 a^14 0 a^3\n1 a^5 1 a^10\n1 a^8 1 a^8\n";
inline constexpr const char* kGf16FirstForward =
    "a^9 a^5 a^2 a^13\na^7 a^1 a^10 a^9\na^11 0 1 a^5\na^11 a^8 a^4 0\n";
inline constexpr const char* kGf16FirstBackward =
    "a^14 a^11 a^9 a^13\n0 a^4 a^8 a^2\na^6 a^13 a^13 a^2\na^2 1 a^4 a^6\n";
inline constexpr const char* kGf16TwoGapForward =
    "a^10 a^2 a^2 a^14\na^12 a^2 a^10 a^5\na^1 a^9 1 1\na^7 a^7 a^4 a^12\n";
inline constexpr const char* kGf16TwoGapBackward =
    "a^7 a^4 a^12 a^2\na^5 a^10 a^9 a^6\na^5 1 a^12 a^12\na^9 a^2 a^7 a^5\n";
inline constexpr const char* kGf16Involutory =
    "a^9 a^7 a^7 a^7\na^3 a^14 a^3 a^3\na^10 a^10 a^5 a^10\na^2 a^2 a^2 a^8\n";
inline constexpr const char* kGf16OddQuotient = "a^10 a^13 a^1\na^3 a^11 a^11\na^11 a^1 a^13\n";

}  // namespace fixtures
