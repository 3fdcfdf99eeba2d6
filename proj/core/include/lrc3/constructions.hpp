#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lrc3/code.hpp"
#include "lrc3/gf3.hpp"

namespace lrc3 {

// Fixed matrices, transcribed literally.

/// Parity check of the ternary [4,2,3] MDS code (the tetracode).
Gf3Matrix tetracode_parity();

/// 3x13 parity check of the [13,10,3] code whose first-column deletions give
/// the whole d=3 family (a ternary Hamming code).
Gf3Matrix hamming13_parity();

/// 6x8 parity check of the [8,2,6] code.
Gf3Matrix length8_dim2_parity();

/// 6x12 parity check of the [12,6,6] near-MDS code (extended quadratic
/// residue code).
Gf3Matrix extended_qr12_parity();

/// 7x12 parity check of the [12,5,6] code with locality 2.
Gf3Matrix length12_dim5_parity();

// Construction classes 1..8.  Each classN_parity returns the literal
// parity-check matrix; classN wraps it in a LinearCode.

/// d=2: r | k gives I_{k/r} x (1..1)_{r+1}; otherwise the widened block
/// matrix with the last r - (k mod r) columns deleted.
Gf3Matrix class1_parity(std::size_t k, std::size_t r);
LinearCode class1(std::size_t k, std::size_t r);

/// d=3: hamming13_parity() with its first g columns deleted, 0 <= g <= 4.
Gf3Matrix class2_parity(std::size_t g);
LinearCode class2(std::size_t g);

/// d=4, r=1: [I_{k+1} x (1 1); (1..1)_{k+1} x (0 1)], k >= 2.
Gf3Matrix class3_parity(std::size_t k);
LinearCode class3(std::size_t k);

/// d=6, r=1: the fixed (8,2) matrix.
Gf3Matrix class4_parity();
LinearCode class4();

/// Near-MDS family: (12,6) is the extended QR code; the other 15 entries are
/// produced by recorded puncture/shorten sequences (see class5_fixtures).
LinearCode class5(std::size_t n, std::size_t k);

/// The 16 admissible (n, k) pairs, in the fixture-file order.
const std::vector<std::pair<std::size_t, std::size_t>>& class5_targets();

/// d=4, r=3: [I_l x (1 1 1 1); (1..1)_l x (0 0 1 1; 0 1 0 1)], l >= 3.
Gf3Matrix class6_parity(std::size_t l);
LinearCode class6(std::size_t l);

/// d=3, r=2: [I_l x (1 1 1); (1..1)_l x (0 1 2)], l >= 3.
Gf3Matrix class7_parity(std::size_t l);
LinearCode class7(std::size_t l);

/// d=6, r=2: the fixed (12,5) matrix.
Gf3Matrix class8_parity();
LinearCode class8();

// Class-5 fixture machinery.

struct SurgeryStep {
  enum class Op { kPuncture, kShorten } op;
  std::size_t pos;  // 1-based, relative to the current code
};

struct Class5Fixture {
  std::size_t n, k;
  std::vector<SurgeryStep> steps;
};

/// Parse the fixture text format: one line per target,
/// "n k : op1(pos) op2(pos) ...", ops in {puncture, shorten}.
std::vector<Class5Fixture> parse_class5_fixtures(const std::string& text);

/// The built-in fixture table (embedded copy of the versioned fixture file).
const std::vector<Class5Fixture>& class5_fixtures();

LinearCode apply_surgery(const LinearCode& base, const std::vector<SurgeryStep>& steps);

}  // namespace lrc3
