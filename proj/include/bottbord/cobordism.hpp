#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bottbord/charclass.hpp"

namespace bottbord {

enum class TriState { False, True, NotApplicable };
enum class Obstruction { None, SW, Pontryagin, Both };

struct CobordismVerdict {
    bool sw_all_zero = false;
    TriState pontryagin_all_zero = TriState::NotApplicable;
    // Thom: SW numbers detect the unoriented cobordism class.
    bool unoriented_boundary = false;
    // Wall: SW + Pontryagin numbers determine the oriented class.
    Obstruction oriented_obstruction = Obstruction::None;
    CharNumberReport sw;
    std::optional<CharNumberReport> pontryagin;
};

// SW numbers via the mod-2 (reduced) ring; Pontryagin numbers via the
// rational engine for integer inputs of even n.
CobordismVerdict verdict(const ReducedVectorMatrix& A);

// Quasitoric SW numbers computed through the integer ring (pairings of
// prod (1 + v_F) reduced mod 2); dual route to the mod-2 ring used by
// verdict, cross-checked by lemma41_crosscheck.
CharNumberReport quasitoric_sw_via_integer_ring(const CohomologyRing<Rational>& Rz);

// Lemma 4.1 both ways: the two SW routes agree entrywise (under index
// doubling), hence mod-2 vanishing implies quasitoric vanishing.
bool lemma41_crosscheck(const ReducedVectorMatrix& A_integer);

struct VerifyParams {
    std::vector<int> dims;
    int n = 0;
    int k = 0;
    int bound = 2;
    int samples = 0; // 0 = verifier default
    std::uint64_t seed = 1;
    std::vector<long long> b;
};

struct VerificationResult {
    std::string theorem;
    long long instances = 0;
    std::vector<std::string> counterexamples;
    double elapsed_ms = 0;
    std::vector<std::pair<std::string, std::string>> details; // ordered key/value
    bool pass() const { return counterexamples.empty(); }
};

const std::vector<std::string>& known_theorems();

VerificationResult verify(const std::string& theorem_id, const VerifyParams& params = {});

} // namespace bottbord
