#include "nvodmr/io/config_io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef NVODMR_DEFAULT_PRESET_DIR
#define NVODMR_DEFAULT_PRESET_DIR "presets"
#endif

namespace nvodmr::io {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

Eigen::Vector3d vec3(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3) throw ConfigError(what + " must be an array of 3 numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Eigen::Matrix3d mat3(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3) throw ConfigError(what + " must be a 3x3 array");
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) m.row(r) = vec3(j[static_cast<std::size_t>(r)], what).transpose();
    return m;
}

template <typename T>
void read_if(const json& j, const char* key, T& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

std::vector<HyperfineCoupling> parse_sites(const json& arr) {
    if (!arr.is_array()) throw ConfigError("explicit_sites must be an array");
    std::vector<HyperfineCoupling> sites;
    for (const auto& s : arr) {
        reject_unknown_keys(s, {"label", "count", "a_mhz", "a_row_mhz", "tensor_mhz"}, "explicit site");
        const std::string label = s.value("label", std::string("site"));
        const int count = s.value("count", 1);
        if (count < 1) throw ConfigError("explicit site '" + label + "' needs count >= 1");
        const int forms = static_cast<int>(s.contains("a_mhz")) + static_cast<int>(s.contains("a_row_mhz")) +
                          static_cast<int>(s.contains("tensor_mhz"));
        if (forms != 1) {
            throw ConfigError("explicit site '" + label +
                              "' needs exactly one of a_mhz, a_row_mhz, tensor_mhz");
        }
        for (int k = 0; k < count; ++k) {
            if (s.contains("a_mhz")) {
                sites.push_back(HyperfineCoupling::axial(label, s.at("a_mhz").get<double>()));
            } else if (s.contains("a_row_mhz")) {
                sites.emplace_back(label, vec3(s.at("a_row_mhz"), "a_row_mhz"));
            } else {
                sites.emplace_back(label, mat3(s.at("tensor_mhz"), "tensor_mhz"));
            }
        }
    }
    return sites;
}

BathModel parse_bath(const json& j) {
    reject_unknown_keys(j, {"xi_mhz_a3", "rho_per_a3", "r0_a", "spin_sigma", "threshold_mhz", "catalog",
                            "sigma_override_mhz"},
                        "bath");
    BathModel b;
    read_if(j, "xi_mhz_a3", b.xi);
    read_if(j, "rho_per_a3", b.rho);
    read_if(j, "r0_a", b.r0);
    read_if(j, "spin_sigma", b.spin_sigma);
    read_if(j, "threshold_mhz", b.threshold_mhz);
    if (j.contains("catalog")) {
        b.catalog.clear();
        for (const auto& e : j.at("catalog")) {
            reject_unknown_keys(e, {"label", "a_mhz", "multiplicity"}, "catalog entry");
            b.catalog.push_back({e.at("label").get<std::string>(), e.at("a_mhz").get<double>(),
                                 e.value("multiplicity", 1)});
        }
    }
    if (j.contains("sigma_override_mhz") && !j.at("sigma_override_mhz").is_null()) {
        b.sigma_override_mhz = j.at("sigma_override_mhz").get<double>();
    }
    return b;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::filesystem::path preset_directory() {
    if (const char* env = std::getenv(kPresetDirEnv); env != nullptr && *env != '\0') {
        return env;
    }
    return NVODMR_DEFAULT_PRESET_DIR;
}

SimulationConfig config_from_json(const json& j) {
    reject_unknown_keys(j,
                        {"name", "zfs_d_mhz", "delta_e_mhz", "enrichment", "bath", "explicit_sites",
                         "field", "orientation_weights", "n_samples", "histogram", "backend", "seed",
                         "nuclear_zeeman", "lorentzian_fwhm_mhz", "max_nuclei", "exact_max_nuclei"},
                        "config");
    SimulationConfig c;
    try {
        read_if(j, "name", c.name);
        read_if(j, "zfs_d_mhz", c.zfs_d_mhz);
        read_if(j, "delta_e_mhz", c.delta_e_mhz);
        read_if(j, "enrichment", c.enrichment);
        if (j.contains("bath")) c.bath = parse_bath(j.at("bath"));
        if (j.contains("explicit_sites")) c.explicit_sites = parse_sites(j.at("explicit_sites"));
        if (j.contains("field")) {
            const json& f = j.at("field");
            reject_unknown_keys(f, {"b_crystal_gauss", "gamma_e_mhz_per_gauss"}, "field");
            if (f.contains("b_crystal_gauss")) c.field.b_crystal_gauss = vec3(f.at("b_crystal_gauss"), "b_crystal_gauss");
            read_if(f, "gamma_e_mhz_per_gauss", c.field.gamma_e);
        }
        if (j.contains("orientation_weights")) {
            const json& w = j.at("orientation_weights");
            if (!w.is_array() || w.size() != 4) throw ConfigError("orientation_weights needs 4 numbers");
            for (std::size_t k = 0; k < 4; ++k) c.orientation_weights[k] = w[k].get<double>();
        }
        read_if(j, "n_samples", c.n_samples);
        c.histogram = HistogramSpec{c.zfs_d_mhz - 500.0, c.zfs_d_mhz + 500.0, 1.0};
        if (j.contains("histogram")) {
            const json& h = j.at("histogram");
            reject_unknown_keys(h, {"f_min_mhz", "f_max_mhz", "bin_width_mhz"}, "histogram");
            read_if(h, "f_min_mhz", c.histogram.f_min_mhz);
            read_if(h, "f_max_mhz", c.histogram.f_max_mhz);
            read_if(h, "bin_width_mhz", c.histogram.bin_width_mhz);
        }
        if (j.contains("backend")) c.backend = parse_backend(j.at("backend").get<std::string>());
        read_if(j, "seed", c.seed);
        read_if(j, "nuclear_zeeman", c.hamiltonian.nuclear_zeeman);
        read_if(j, "lorentzian_fwhm_mhz", c.lorentzian_fwhm_mhz);
        read_if(j, "max_nuclei", c.max_nuclei);
        read_if(j, "exact_max_nuclei", c.exact_max_nuclei);
        c.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    return c;
}

json config_to_json(const SimulationConfig& c) {
    json sites = json::array();
    for (const auto& s : c.explicit_sites) {
        json site{{"label", s.label()}};
        if (s.full_tensor()) {
            json t = json::array();
            for (int r = 0; r < 3; ++r) {
                t.push_back({(*s.full_tensor())(r, 0), (*s.full_tensor())(r, 1), (*s.full_tensor())(r, 2)});
            }
            site["tensor_mhz"] = t;
        } else {
            site["a_row_mhz"] = {s.a_row().x(), s.a_row().y(), s.a_row().z()};
        }
        sites.push_back(site);
    }
    json catalog = json::array();
    for (const auto& e : c.bath.catalog) {
        catalog.push_back({{"label", e.label}, {"a_mhz", e.a_mhz}, {"multiplicity", e.multiplicity}});
    }
    json bath{{"xi_mhz_a3", c.bath.xi},
              {"rho_per_a3", c.bath.rho},
              {"r0_a", c.bath.r0},
              {"spin_sigma", c.bath.spin_sigma},
              {"threshold_mhz", c.bath.threshold_mhz},
              {"catalog", catalog},
              {"sigma_override_mhz", c.bath.sigma_override_mhz ? json(*c.bath.sigma_override_mhz) : json(nullptr)}};
    const auto& b = c.field.b_crystal_gauss;
    return json{
        {"name", c.name},
        {"zfs_d_mhz", c.zfs_d_mhz},
        {"delta_e_mhz", c.delta_e_mhz},
        {"enrichment", c.enrichment},
        {"bath", bath},
        {"explicit_sites", sites},
        {"field", {{"b_crystal_gauss", {b.x(), b.y(), b.z()}}, {"gamma_e_mhz_per_gauss", c.field.gamma_e}}},
        {"orientation_weights", c.orientation_weights},
        {"n_samples", c.n_samples},
        {"histogram",
         {{"f_min_mhz", c.histogram.f_min_mhz},
          {"f_max_mhz", c.histogram.f_max_mhz},
          {"bin_width_mhz", c.histogram.bin_width_mhz}}},
        {"backend", std::string(to_string(c.backend))},
        {"seed", c.seed},
        {"nuclear_zeeman", c.hamiltonian.nuclear_zeeman},
        {"lorentzian_fwhm_mhz", c.lorentzian_fwhm_mhz},
        {"max_nuclei", c.max_nuclei},
        {"exact_max_nuclei", c.exact_max_nuclei},
    };
}

SimulationConfig load_config(const std::string& source) {
    namespace fs = std::filesystem;
    fs::path path(source);
    if (!fs::exists(path) && !path.has_extension() && !path.has_parent_path()) {
        const fs::path preset = preset_directory() / (source + ".json");
        if (!fs::exists(preset)) {
            throw ConfigError("config '" + source + "' is neither a file nor a preset in '" +
                              preset_directory().string() + "'");
        }
        path = preset;
    }
    if (!fs::exists(path)) throw ConfigError("config file '" + path.string() + "' does not exist");

    const std::string text = read_file(path);
    std::string json_text = text;
    if (path.extension() == ".csv") {
        const std::string marker = "# config: ";
        std::istringstream lines(text);
        std::string line;
        json_text.clear();
        while (std::getline(lines, line)) {
            if (line.rfind(marker, 0) == 0) {
                json_text = line.substr(marker.size());
                break;
            }
        }
        if (json_text.empty()) throw ConfigError("'" + path.string() + "' carries no config manifest line");
    }
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse '" + path.string() + "': " + e.what());
    }
    return config_from_json(j);
}

}  // namespace nvodmr::io
