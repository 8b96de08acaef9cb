#include "uavcic/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace uavcic {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "fc_ghz",
        "rb_bandwidth_hz",
        "noise_psd_dbm_hz",
        "cell_radius_m",
        "bs_height_m",
        "ue_height_m",
        "uav_altitude_m",
        "uav_bs1_horizontal_distance_m",
        "p1_dbm",
        "pu_dbm",
        "ru_bps_hz",
        "tiers_m",
        "bits_per_helper",
        "n_trials",
        "seed",
        "antenna_downtilt_deg",
        "antenna_theta3db_deg",
        "antenna_sla_db",
        "antenna_gmax_dbi",
    };
    return keys;
}

double get_number(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const json& v = j.at(key);
    if (!v.is_number()) {
        throw ConfigError("config key '" + key + "': expected a number, got " + v.dump());
    }
    return v.get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const json& v = j.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError("config key '" + key + "': expected an integer, got " + v.dump());
    }
    return v.get<int>();
}

std::uint64_t get_u64(const json& j, const std::string& key, std::uint64_t fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const json& v = j.at(key);
    if (!v.is_number_unsigned()) {
        throw ConfigError("config key '" + key + "': expected a nonnegative integer, got " +
                          v.dump());
    }
    return v.get<std::uint64_t>();
}

ScenarioConfig config_from_json(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config: top level must be a JSON object of scenario keys");
    }
    for (const auto& item : j.items()) {
        if (known_keys().count(item.key()) == 0) {
            throw ConfigError("unknown config key '" + item.key() + "'");
        }
    }

    ScenarioConfig cfg;
    cfg.fc_ghz = get_number(j, "fc_ghz", cfg.fc_ghz);
    cfg.rb_bandwidth_hz = get_number(j, "rb_bandwidth_hz", cfg.rb_bandwidth_hz);
    cfg.noise_psd_dbm_hz = get_number(j, "noise_psd_dbm_hz", cfg.noise_psd_dbm_hz);
    cfg.cell_radius_m = get_number(j, "cell_radius_m", cfg.cell_radius_m);
    cfg.bs_height_m = get_number(j, "bs_height_m", cfg.bs_height_m);
    cfg.ue_height_m = get_number(j, "ue_height_m", cfg.ue_height_m);
    cfg.uav_altitude_m = get_number(j, "uav_altitude_m", cfg.uav_altitude_m);
    cfg.uav_bs1_horizontal_distance_m =
        get_number(j, "uav_bs1_horizontal_distance_m", cfg.uav_bs1_horizontal_distance_m);
    cfg.p1_dbm = get_number(j, "p1_dbm", cfg.p1_dbm);
    cfg.pu_dbm = get_number(j, "pu_dbm", cfg.pu_dbm);
    cfg.ru_bps_hz = get_number(j, "ru_bps_hz", cfg.ru_bps_hz);
    cfg.tiers_m = get_int(j, "tiers_m", cfg.tiers_m);
    cfg.n_trials = get_int(j, "n_trials", cfg.n_trials);
    cfg.seed = get_u64(j, "seed", cfg.seed);
    cfg.antenna.downtilt_deg = get_number(j, "antenna_downtilt_deg", cfg.antenna.downtilt_deg);
    cfg.antenna.theta3db_deg = get_number(j, "antenna_theta3db_deg", cfg.antenna.theta3db_deg);
    cfg.antenna.sla_db = get_number(j, "antenna_sla_db", cfg.antenna.sla_db);
    cfg.antenna.gmax_db = get_number(j, "antenna_gmax_dbi", cfg.antenna.gmax_db);

    if (j.contains("bits_per_helper")) {
        const json& v = j.at("bits_per_helper");
        if (v.is_number_integer()) {
            cfg.uniform_bits = v.get<int>();
            cfg.bits_per_helper.clear();
        } else if (v.is_array()) {
            cfg.bits_per_helper.clear();
            for (const json& e : v) {
                if (!e.is_number_integer()) {
                    throw ConfigError(
                        "config key 'bits_per_helper': list entries must be integers, got " +
                        e.dump());
                }
                cfg.bits_per_helper.push_back(e.get<int>());
            }
        } else {
            throw ConfigError(
                "config key 'bits_per_helper': expected an integer or a list of integers, got " +
                v.dump());
        }
    }

    cfg.validate();
    return cfg;
}

json config_to_json_obj(const ScenarioConfig& cfg) {
    json j;
    j["fc_ghz"] = cfg.fc_ghz;
    j["rb_bandwidth_hz"] = cfg.rb_bandwidth_hz;
    j["noise_psd_dbm_hz"] = cfg.noise_psd_dbm_hz;
    j["cell_radius_m"] = cfg.cell_radius_m;
    j["bs_height_m"] = cfg.bs_height_m;
    j["ue_height_m"] = cfg.ue_height_m;
    j["uav_altitude_m"] = cfg.uav_altitude_m;
    j["uav_bs1_horizontal_distance_m"] = cfg.uav_bs1_horizontal_distance_m;
    j["p1_dbm"] = cfg.p1_dbm;
    j["pu_dbm"] = cfg.pu_dbm;
    j["ru_bps_hz"] = cfg.ru_bps_hz;
    j["tiers_m"] = cfg.tiers_m;
    if (cfg.bits_per_helper.empty()) {
        j["bits_per_helper"] = cfg.uniform_bits;
    } else {
        j["bits_per_helper"] = cfg.bits_per_helper;
    }
    j["n_trials"] = cfg.n_trials;
    j["seed"] = cfg.seed;
    j["antenna_downtilt_deg"] = cfg.antenna.downtilt_deg;
    j["antenna_theta3db_deg"] = cfg.antenna.theta3db_deg;
    j["antenna_sla_db"] = cfg.antenna.sla_db;
    j["antenna_gmax_dbi"] = cfg.antenna.gmax_db;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_blank(const std::string& text) {
    return text.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

ScenarioConfig parse_config(const std::string& path) { return parse_config_text(read_file(path)); }

ScenarioConfig parse_config_text(const std::string& text) {
    if (is_blank(text)) {
        ScenarioConfig cfg;
        cfg.validate();
        return cfg;
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    return config_from_json(j);
}

std::string config_to_json(const ScenarioConfig& cfg) { return config_to_json_obj(cfg).dump(2); }

std::string manifest_path_for(const std::string& csv_path) {
    return csv_path + ".manifest.json";
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
    json j;
    j["tool_version"] = manifest.tool_version;
    j["timestamp_utc"] = manifest.timestamp_utc;
    j["seed"] = manifest.seed;
    j["n_trials"] = manifest.n_trials;
    j["output_path"] = manifest.output_path;
    j["config"] = config_to_json_obj(manifest.config);
    if (!manifest.sweep.variable.empty()) {
        j["sweep"] = {{"variable", manifest.sweep.variable}, {"values", manifest.sweep.values}};
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write manifest '" + path + "'");
    }
    out << j.dump(2) << "\n";
}

RunManifest read_manifest(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("manifest: malformed JSON: ") + e.what());
    }
    RunManifest m;
    try {
        m.tool_version = j.at("tool_version").get<std::string>();
        m.timestamp_utc = j.at("timestamp_utc").get<std::string>();
        m.seed = j.at("seed").get<std::uint64_t>();
        m.n_trials = j.at("n_trials").get<int>();
        m.output_path = j.at("output_path").get<std::string>();
        m.config = config_from_json(j.at("config"));
        if (j.contains("sweep")) {
            m.sweep.variable = j.at("sweep").at("variable").get<std::string>();
            m.sweep.values = j.at("sweep").at("values").get<std::vector<double>>();
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("manifest: missing or malformed field: ") + e.what());
    }
    // The manifest is the authoritative seed/trial record for a rerun.
    m.config.seed = m.seed;
    m.config.n_trials = m.n_trials;
    return m;
}

}  // namespace uavcic
