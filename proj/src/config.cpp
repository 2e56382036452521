#include "hartogs/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hartogs {

const char* to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Moments: return "moments";
        case ExperimentKind::Lemma2: return "lemma2";
        case ExperimentKind::Weights: return "weights";
        case ExperimentKind::Hankel: return "hankel";
        case ExperimentKind::Spectra: return "spectra";
        case ExperimentKind::Pcert: return "pcert";
        default: return "zoo-suite";
    }
}

ExperimentKind experiment_kind_from(const std::string& s) {
    if (s == "moments") return ExperimentKind::Moments;
    if (s == "lemma2") return ExperimentKind::Lemma2;
    if (s == "weights") return ExperimentKind::Weights;
    if (s == "hankel") return ExperimentKind::Hankel;
    if (s == "spectra") return ExperimentKind::Spectra;
    if (s == "pcert") return ExperimentKind::Pcert;
    if (s == "zoo-suite") return ExperimentKind::ZooSuite;
    throw std::invalid_argument("unknown experiment kind '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

ProfileSpec parse_profile(const std::string& v) {
    // family(p1,p2,...)
    size_t open = v.find('(');
    if (open == std::string::npos || v.back() != ')')
        throw std::invalid_argument("profile spec must look like family(p1,p2): " + v);
    ProfileSpec ps;
    ps.family = trim(v.substr(0, open));
    std::string args = v.substr(open + 1, v.size() - open - 2);
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!trim(tok).empty()) ps.params.push_back(std::stod(trim(tok)));
    return ps;
}

}  // namespace

std::vector<int> parse_mode_list(const std::string& s) {
    std::vector<int> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        int a = std::stoi(trim(s.substr(0, dots)));
        int b = std::stoi(trim(s.substr(dots + 2)));
        if (b < a) throw std::invalid_argument("empty mode range: " + s);
        for (int n = a; n <= b; ++n) out.push_back(n);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!trim(tok).empty()) out.push_back(std::stoi(trim(tok)));
    if (out.empty()) throw std::invalid_argument("empty mode list: " + s);
    return out;
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    bool have_kind = false;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not key=value: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "experiment") {
            cfg.kind = experiment_kind_from(val);
            have_kind = true;
        } else if (key == "domain") {
            cfg.domain = val;
        } else if (key == "profile.inner") {
            cfg.inner = parse_profile(val);
        } else if (key == "profile.outer") {
            cfg.outer = parse_profile(val);
        } else if (key == "case") {
            cfg.case_tag = std::stoi(val);
        } else if (key == "base.radius") {
            cfg.base_radius = std::stod(val);
        } else if (key == "annulus") {
            auto comma = val.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("annulus expects 'a,b'");
            cfg.annulus_a = std::stod(trim(val.substr(0, comma)));
            cfg.annulus_b = std::stod(trim(val.substr(comma + 1)));
        } else if (key == "modes") {
            cfg.modes = parse_mode_list(val);
        } else if (key == "resolution") {
            cfg.resolution = std::stoi(val);
        } else if (key == "out") {
            cfg.out_dir = val;
        } else if (key == "jobs") {
            cfg.jobs = std::stoi(val);
        } else if (key.rfind("tolerances.", 0) == 0) {
            cfg.tolerances[key.substr(11)] = std::stod(val);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    if (!have_kind) throw std::invalid_argument("config must set 'experiment'");
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void ExperimentConfig::validate() const {
    bool spectral_kind = kind == ExperimentKind::Spectra ||
                         kind == ExperimentKind::ZooSuite ||
                         kind == ExperimentKind::Hankel;
    if (spectral_kind && resolution < 32)
        throw std::invalid_argument("resolution must be >= 32 for this experiment");
    if (case_tag != 1 && case_tag != 2)
        throw std::invalid_argument("case must be 1 or 2");
    for (int n : modes) {
        if (case_tag == 1 && n < 2 && kind != ExperimentKind::Moments &&
            kind != ExperimentKind::Lemma2)
            throw std::invalid_argument("case-1 experiments need modes n >= 2");
        if (case_tag == 2 && n < 0)
            throw std::invalid_argument("case-2 experiments need modes n >= 0");
    }
}

}  // namespace hartogs
