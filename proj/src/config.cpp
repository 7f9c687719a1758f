#include "magspec/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "magspec/errors.hpp"
#include "magspec/io.hpp"

namespace magspec {

namespace {

using Json = nlohmann::json;

// Flat value model shared by both config formats.
struct Value {
    enum Kind { number, text, boolean, array } kind = number;
    double num = 0.0;
    std::string str;
    bool flag = false;
    std::vector<double> arr;
};
using FlatMap = std::map<std::string, Value>;

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Value parse_toml_value(const std::string& raw, const std::string& key) {
    Value v;
    if (raw.empty()) throw ConfigError("empty value for key " + key);
    if (raw.front() == '"' || raw.front() == '\'') {
        if (raw.size() < 2 || raw.back() != raw.front())
            throw ConfigError("unterminated string for key " + key);
        v.kind = Value::text;
        v.str = raw.substr(1, raw.size() - 2);
        return v;
    }
    if (raw == "true" || raw == "false") {
        v.kind = Value::boolean;
        v.flag = raw == "true";
        return v;
    }
    if (raw.front() == '[') {
        if (raw.back() != ']')
            throw ConfigError("unterminated array for key " + key);
        v.kind = Value::array;
        std::string body = raw.substr(1, raw.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            try {
                v.arr.push_back(std::stod(item));
            } catch (...) {
                throw ConfigError("bad array element '" + item +
                                  "' for key " + key);
            }
        }
        return v;
    }
    try {
        size_t used = 0;
        v.num = std::stod(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
    } catch (...) {
        throw ConfigError("bad value '" + raw + "' for key " + key);
    }
    return v;
}

// Minimal TOML subset: [section] headers, key = value with numbers,
// strings, booleans and flat numeric arrays; dotted keys allowed.
FlatMap parse_toml(const std::string& text) {
    FlatMap map;
    std::stringstream ss(text);
    std::string line, section;
    while (std::getline(ss, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("bad section header: " + line);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value, got: " + line);
        std::string key = trim(line.substr(0, eq));
        if (!section.empty()) key = section + "." + key;
        map[key] = parse_toml_value(trim(line.substr(eq + 1)), key);
    }
    return map;
}

void flatten_json(const Json& j, const std::string& prefix, FlatMap& out) {
    for (const auto& [k, val] : j.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        Value v;
        if (val.is_object()) {
            flatten_json(val, key, out);
            continue;
        } else if (val.is_string()) {
            v.kind = Value::text;
            v.str = val.get<std::string>();
        } else if (val.is_boolean()) {
            v.kind = Value::boolean;
            v.flag = val.get<bool>();
        } else if (val.is_array()) {
            v.kind = Value::array;
            for (const auto& e : val) v.arr.push_back(e.get<double>());
        } else if (val.is_number()) {
            v.num = val.get<double>();
        } else {
            throw ConfigError("unsupported JSON value for key " + key);
        }
        out[key] = v;
    }
}

class Reader {
public:
    explicit Reader(FlatMap map) : map_(std::move(map)) {}

    bool has(const std::string& key) const { return map_.count(key) > 0; }
    double number(const std::string& key, double fallback) const {
        const auto it = map_.find(key);
        if (it == map_.end()) return fallback;
        if (it->second.kind != Value::number)
            throw ConfigError("key " + key + " must be a number");
        return it->second.num;
    }
    std::string text(const std::string& key, const std::string& fallback) const {
        const auto it = map_.find(key);
        if (it == map_.end()) return fallback;
        if (it->second.kind != Value::text)
            throw ConfigError("key " + key + " must be a string");
        return it->second.str;
    }
    std::vector<double> array(const std::string& key) const {
        const auto it = map_.find(key);
        if (it == map_.end()) return {};
        if (it->second.kind == Value::number) return {it->second.num};
        if (it->second.kind != Value::array)
            throw ConfigError("key " + key + " must be an array");
        return it->second.arr;
    }

private:
    FlatMap map_;
};

RunConfig from_reader(const Reader& r) {
    RunConfig c;
    c.kind = r.text("model.kind", c.kind);
    c.dim = static_cast<int>(r.number("model.dim", c.dim));
    c.L = r.number("model.L", c.L);
    c.h = r.number("model.h", c.h);
    c.J = r.number("model.J", c.J);
    c.decay_type = r.text("model.decay.type", c.decay_type);
    c.decay_rate = r.number("model.decay.rate", c.decay_rate);
    c.potential_lambda = r.number("model.potential.lambda", c.potential_lambda);
    c.potential_sigma = r.number("model.potential.sigma", c.potential_sigma);
    c.a_shift = r.number("model.a_shift", c.a_shift);

    const std::string ft = r.text("field.type", "constant");
    if (ft == "zero")
        c.field.type = FieldType::zero;
    else if (ft == "constant")
        c.field.type = FieldType::constant;
    else if (ft == "sine")
        c.field.type = FieldType::sine;
    else if (ft == "quadratic")
        c.field.type = FieldType::quadratic;
    else
        throw ConfigError("field.type must be zero|constant|sine|quadratic, "
                          "got " + ft);
    c.field.b0 = r.number("field.b0", c.field.b0);
    c.field.db = r.number("field.db", c.field.db);

    c.sweep.quantity = r.text("sweep.quantity", c.sweep.quantity);
    c.sweep.b_min = r.number("sweep.b_min", c.sweep.b_min);
    c.sweep.b_max = r.number("sweep.b_max", c.sweep.b_max);
    c.sweep.points_per_decade = static_cast<int>(
        r.number("sweep.points_per_decade", c.sweep.points_per_decade));
    const std::vector<double> zre = r.array("sweep.z");
    const std::vector<double> zim = r.array("sweep.z_imag");
    for (size_t i = 0; i < zre.size(); ++i)
        c.sweep.z.emplace_back(zre[i], i < zim.size() ? zim[i] : 0.0);
    c.sweep.M = r.array("sweep.M");

    c.out_dir = r.text("output.directory", c.out_dir);
    c.seed = static_cast<std::uint64_t>(r.number("seed", 1.0));
    c.workers = static_cast<int>(r.number("workers", 1.0));

    if (c.kind != "harper" && c.kind != "longrange" &&
        c.kind != "mag_schrodinger")
        throw ConfigError("model.kind must be harper|longrange|"
                          "mag_schrodinger, got " + c.kind);
    if (c.decay_type != "exponential" && c.decay_type != "power")
        throw ConfigError("model.decay.type must be exponential|power");
    return c;
}

}  // namespace

ModelSpec RunConfig::model_spec() const {
    ModelSpec spec;
    if (kind == "harper") spec.kind = ModelKind::harper;
    else if (kind == "longrange") spec.kind = ModelKind::longrange;
    else spec.kind = ModelKind::mag_schrodinger;
    spec.grid = std::make_shared<Grid>(dim, L, h);
    spec.hopping = J;
    spec.decay_type = decay_type == "exponential" ? DecayType::exponential
                                                  : DecayType::power;
    spec.decay_rate = decay_rate;
    spec.potential_lambda = potential_lambda;
    spec.potential_sigma = potential_sigma;
    return spec;
}

MagneticField RunConfig::magnetic_field() const {
    if (field.type == FieldType::constant && dim == 2)
        return MagneticField::constant(field.b0);
    return MagneticField::zero(dim);
}

MagneticField RunConfig::perturbation_field() const {
    if (dim == 2) return MagneticField::constant(field.db);
    return MagneticField::zero(dim);
}

PhaseFunction RunConfig::phase() const {
    if (dim == 2) return line_phase(perturbation_field());
    // 1D magnetic fields vanish identically; the 1D Harper family is driven
    // by a synthetic antisymmetric phase instead.
    if (field.type == FieldType::sine) return PhaseFunction::sine(field.db);
    if (field.type == FieldType::quadratic)
        return PhaseFunction::quadratic(field.db);
    return PhaseFunction::zero();
}

std::vector<Complex> RunConfig::default_z(double spectrum_min) const {
    return {Complex(spectrum_min - 1.0, 0.0), Complex(spectrum_min - 2.0, 0.0),
            Complex(spectrum_min - 4.0, 0.0), Complex(spectrum_min - 1.0, 1.0)};
}

std::string RunConfig::canonical() const {
    std::ostringstream os;
    os << "kind=" << kind << ";dim=" << dim << ";L=" << format_number(L)
       << ";h=" << format_number(h) << ";J=" << format_number(J)
       << ";decay=" << decay_type << ":" << format_number(decay_rate)
       << ";lambda=" << format_number(potential_lambda)
       << ";sigma=" << format_number(potential_sigma)
       << ";a_shift=" << format_number(a_shift)
       << ";field=" << static_cast<int>(field.type) << ":"
       << format_number(field.b0) << ":" << format_number(field.db)
       << ";sweep=" << sweep.quantity << ":" << format_number(sweep.b_min)
       << ":" << format_number(sweep.b_max) << ":" << sweep.points_per_decade;
    os << ";z=";
    for (const Complex& z : sweep.z)
        os << format_number(z.real()) << "," << format_number(z.imag()) << ",";
    os << ";M=";
    for (double m : sweep.M) os << format_number(m) << ",";
    os << ";seed=" << seed;
    return os.str();
}

std::string RunConfig::hash() const {
    const std::string s = canonical();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

RunConfig parse_config_toml(const std::string& text) {
    return from_reader(Reader(parse_toml(text)));
}

RunConfig parse_config_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad JSON config: ") + e.what());
    }
    FlatMap map;
    flatten_json(j, "", map);
    return from_reader(Reader(std::move(map)));
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const bool json = path.size() >= 5 &&
                      path.compare(path.size() - 5, 5, ".json") == 0;
    return json ? parse_config_json(buffer.str())
                : parse_config_toml(buffer.str());
}

}  // namespace magspec
