#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "blockspec/block_matrix.hpp"
#include "blockspec/gcl.hpp"
#include "blockspec/io.hpp"
#include "blockspec/spectral.hpp"

namespace blockspec {

/// Assembles the ensemble at scale 1/sqrt(nd) and returns its spectrum with
/// provenance filled in.
Spectrum ensemble_spectrum(const RandomStream& stream, const BlockLaw& law, Index n,
                           DiagonalPolicy policy = DiagonalPolicy::Zero);
Spectrum ensemble_spectrum(const BlockLaw& law, Index n, std::uint64_t seed,
                           DiagonalPolicy policy = DiagonalPolicy::Zero);

struct SpectrumOptions {
    std::string law = "so-haar:2";
    Index n = 500;
    Index d = 2; // fallback when the law string has no ":d" suffix
    std::uint64_t seed = 1;
    DiagonalPolicy policy = DiagonalPolicy::Zero;
    int bins = 100;
    std::filesystem::path out_dir;
};
RunManifest cmd_spectrum(const SpectrumOptions& opts);

struct QqOptions {
    std::string law_a = "so-haar:2";
    std::string law_b = "goe"; // a block law or "semicircle:<sigma>"
    Index n = 500;
    Index d = 2;
    std::uint64_t seed = 1;
    std::filesystem::path out_dir;
};
RunManifest cmd_qq(const QqOptions& opts);

struct ConcentrationOptions {
    std::string law = "so-haar:2";
    Index d = 2;
    std::complex<double> z{0.0, 1.0};
    std::vector<Index> n_list{50, 100, 200, 400};
    long reps = 50;
    std::uint64_t seed = 1;
    std::filesystem::path out_dir;
};
RunManifest cmd_concentration(const ConcentrationOptions& opts);

enum class EpsilonMode {
    QuantileLiteral, // epsilon = quantile of d_RID, as written
    QuantileSquared, // epsilon = (quantile of d_RID)^2
};

struct GclOptions {
    Index n = 200;
    Index p = 500;
    double quantile = 0.25;
    std::uint64_t seed = 1;
    EpsilonMode epsilon_mode = EpsilonMode::QuantileLiteral;
    AlignMethod method = AlignMethod::Correlation;
    int bins = 100;
    std::filesystem::path out_dir;
};
RunManifest cmd_gcl(const GclOptions& opts);

struct Sl2TailOptions {
    long samples = 100000;
    std::vector<double> thresholds{10.0, 50.0};
    std::uint64_t seed = 1;
    std::filesystem::path out_dir;
};
RunManifest cmd_sl2_tail(const Sl2TailOptions& opts);

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::filesystem::path out_dir;
    bool acceptance_only = false;
};
/// Runs the invariant suite plus the acceptance criteria, writes the JSON
/// report, and returns the number of failed checks.
int cmd_verify(const VerifyOptions& opts);

/// Re-executes the command a manifest describes, into a fresh directory.
RunManifest rerun_from_manifest(const std::filesystem::path& manifest_path,
                                const std::filesystem::path& out_dir);

/// Parses "a+bi" / "a-bi" / "bi" with b > 0 enforced.
std::complex<double> parse_upper_half_point(const std::string& text);

} // namespace blockspec
