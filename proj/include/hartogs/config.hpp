#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hartogs {

enum class ExperimentKind { Moments, Lemma2, Weights, Hankel, Spectra, Pcert, ZooSuite };

const char* to_string(ExperimentKind k);
ExperimentKind experiment_kind_from(const std::string& s);

struct ProfileSpec {
    std::string family;
    std::vector<double> params;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Moments;
    std::string domain;  // zoo name; empty if inline profiles given
    std::optional<ProfileSpec> inner, outer;
    int case_tag = 1;
    double base_radius = 1.0;
    double annulus_a = 1.0, annulus_b = 2.0;
    std::vector<int> modes;
    int resolution = 128;
    std::string out_dir = ".";
    int jobs = 1;
    std::map<std::string, double> tolerances;

    void validate() const;
};

// flat INI-style key=value text, '#' comments
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// "A..B" or comma-separated list
std::vector<int> parse_mode_list(const std::string& s);

}  // namespace hartogs
