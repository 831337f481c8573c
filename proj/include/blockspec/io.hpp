#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "blockspec/gcl.hpp"
#include "blockspec/spectral.hpp"

namespace blockspec {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Shortest round-trip decimal form at 17 significant digits.
std::string format_value(double v);

/// Comma-separated, header row, LF line endings.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

struct Histogram {
    std::vector<double> edges;  // bins + 1 edges
    std::vector<long> counts;   // bins
};

/// Equal-width bins over [min, max] of the sample; the final bin is closed.
Histogram make_histogram(const std::vector<double>& values, int bins);

void write_histogram_csv(const std::filesystem::path& path, const Histogram& hist);

/// Eigenvalue CSV ("index,eigenvalue") plus a JSON sidecar carrying the
/// provenance meta (law, n, d, seed, scale) next to it.
void write_spectrum(const std::filesystem::path& csv_path, const Spectrum& sp);
Spectrum read_spectrum(const std::filesystem::path& csv_path);

/// Alignment CSV ("i,j,shift,rid" for i < j) plus JSON metadata (n, p, seed).
void write_alignment(const std::filesystem::path& csv_path, const AlignmentResult& a);
AlignmentResult read_alignment(const std::filesystem::path& csv_path);

/// Everything needed to re-run one CLI command bit-identically.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string version = kArtifactVersion;
    std::string gaussian_method;
    std::vector<std::string> outputs;
    double duration_seconds = 0.0;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& path);

} // namespace blockspec
