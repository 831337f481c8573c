#include "blockspec/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace blockspec {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    return out;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p += ".meta.json";
    return p;
}

} // namespace

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out = open_for_write(path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << format_value(row[i]) << (i + 1 < row.size() ? "," : "\n");
        }
    }
}

Histogram make_histogram(const std::vector<double>& values, int bins) {
    if (values.empty() || bins < 1) {
        throw std::invalid_argument("make_histogram: need samples and at least one bin");
    }
    const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
    double lo = *mn_it;
    double hi = *mx_it;
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    for (int b = 0; b <= bins; ++b) {
        h.edges[static_cast<std::size_t>(b)] =
            lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
    }
    for (double v : values) {
        int b = static_cast<int>((v - lo) / (hi - lo) * static_cast<double>(bins));
        b = std::clamp(b, 0, bins - 1);
        ++h.counts[static_cast<std::size_t>(b)];
    }
    return h;
}

void write_histogram_csv(const std::filesystem::path& path, const Histogram& hist) {
    std::vector<std::vector<double>> rows;
    rows.reserve(hist.counts.size());
    for (std::size_t b = 0; b < hist.counts.size(); ++b) {
        rows.push_back({hist.edges[b], hist.edges[b + 1], static_cast<double>(hist.counts[b])});
    }
    write_csv(path, {"bin_lo", "bin_hi", "count"}, rows);
}

void write_spectrum(const std::filesystem::path& csv_path, const Spectrum& sp) {
    std::vector<std::vector<double>> rows;
    rows.reserve(sp.eigenvalues.size());
    for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) {
        rows.push_back({static_cast<double>(i), sp.eigenvalues[i]});
    }
    write_csv(csv_path, {"index", "eigenvalue"}, rows);

    nlohmann::json meta = {
        {"law", sp.meta.law}, {"n", sp.meta.n},         {"d", sp.meta.d},
        {"seed", sp.meta.seed}, {"scale", sp.meta.scale},
    };
    std::ofstream out = open_for_write(sidecar_path(csv_path));
    out << meta.dump(2) << "\n";
}

Spectrum read_spectrum(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) {
        throw std::runtime_error("cannot open spectrum CSV: " + csv_path.string());
    }
    Spectrum sp;
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("malformed spectrum CSV row: " + line);
        }
        sp.eigenvalues.push_back(std::stod(line.substr(comma + 1)));
    }
    std::ifstream meta_in(sidecar_path(csv_path));
    if (meta_in) {
        nlohmann::json meta = nlohmann::json::parse(meta_in);
        sp.meta.law = meta.value("law", "");
        sp.meta.n = meta.value("n", 0L);
        sp.meta.d = meta.value("d", 0L);
        sp.meta.seed = meta.value("seed", std::uint64_t{0});
        sp.meta.scale = meta.value("scale", "");
    }
    return sp;
}

void write_alignment(const std::filesystem::path& csv_path, const AlignmentResult& a) {
    std::ofstream out = open_for_write(csv_path);
    out << "i,j,shift,rid\n";
    for (Index i = 0; i < a.n; ++i) {
        for (Index j = i + 1; j < a.n; ++j) {
            out << i << ',' << j << ',' << a.shift(i, j) << ',' << format_value(a.rid(i, j))
                << '\n';
        }
    }
    nlohmann::json meta = {{"n", a.n}, {"p", a.p}, {"seed", a.seed}};
    std::ofstream meta_out = open_for_write(sidecar_path(csv_path));
    meta_out << meta.dump(2) << "\n";
}

AlignmentResult read_alignment(const std::filesystem::path& csv_path) {
    std::ifstream meta_in(sidecar_path(csv_path));
    if (!meta_in) {
        throw std::runtime_error("missing alignment sidecar for: " + csv_path.string());
    }
    nlohmann::json meta = nlohmann::json::parse(meta_in);
    AlignmentResult a;
    a.n = meta.at("n").get<Index>();
    a.p = meta.at("p").get<Index>();
    a.seed = meta.value("seed", std::uint64_t{0});
    a.shifts.assign(static_cast<std::size_t>(a.n * a.n), 0);
    a.rids.assign(static_cast<std::size_t>(a.n * a.n), 0.0);

    std::ifstream in(csv_path);
    if (!in) {
        throw std::runtime_error("cannot open alignment CSV: " + csv_path.string());
    }
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::size_t pos = 0;
        auto next_field = [&]() {
            const auto comma = line.find(',', pos);
            const std::string field = line.substr(pos, comma - pos);
            pos = (comma == std::string::npos) ? line.size() : comma + 1;
            return field;
        };
        const Index i = static_cast<Index>(std::stol(next_field()));
        const Index j = static_cast<Index>(std::stol(next_field()));
        const long shift = std::stol(next_field());
        const double rid = std::stod(next_field());
        a.shifts[static_cast<std::size_t>(i * a.n + j)] = shift;
        a.shifts[static_cast<std::size_t>(j * a.n + i)] =
            (shift == 0) ? 0 : static_cast<long>(a.p) - shift;
        a.rids[static_cast<std::size_t>(i * a.n + j)] = rid;
        a.rids[static_cast<std::size_t>(j * a.n + i)] = rid;
    }
    return a;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    nlohmann::json j = {
        {"command", manifest.command},
        {"parameters", manifest.parameters},
        {"seed", manifest.seed},
        {"version", manifest.version},
        {"gaussian_method", manifest.gaussian_method},
        {"outputs", manifest.outputs},
        {"duration_seconds", manifest.duration_seconds},
    };
    std::ofstream out = open_for_write(path);
    out << j.dump(2) << "\n";
}

RunManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open manifest: " + path.string());
    }
    nlohmann::json j = nlohmann::json::parse(in);
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.value("version", std::string{});
    m.gaussian_method = j.value("gaussian_method", std::string{});
    m.outputs = j.value("outputs", std::vector<std::string>{});
    m.duration_seconds = j.value("duration_seconds", 0.0);
    return m;
}

} // namespace blockspec
