#pragma once

#include <cstdint>

namespace qcw::config {

/// Default certification tolerance for adversary-bound values.
inline constexpr double kDefaultAdvTol = 1e-4;

/// Enumerated-domain size cap for composed functions (overridable per call).
inline constexpr uint64_t kDefaultDomainCap = 1u << 20;

/// State-vector dimension cap n*q*w for the simulator.
inline constexpr int kDefaultDimCap = 4096;

/// Adversary SDP instance cap on |X|*|Y| entries.
inline constexpr int kAdversaryPairCap = 256;

/// Repetition-count scale for the certificate finder: R = scale * T^2 * s * ceil(log2(fbs+2)).
/// The scale constant is an empirical choice; the asymptotic sizing hides it.
inline constexpr int kCertFinderScale = 64;

/// Default cap on zero-error wrapper batches before BudgetExhausted.
inline constexpr int kMaxBatches = 64;

/// Seed for the fixed random 4-bit function sample used by sweep experiments.
inline constexpr uint64_t kChainSampleSeed = 20260809ULL;

/// Report format version tag.
inline constexpr const char* kReportVersion = "qcw-report-v1";

}  // namespace qcw::config
