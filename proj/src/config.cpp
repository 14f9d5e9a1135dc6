#include "newsrec/config.h"

#include <algorithm>
#include <fstream>
#include <set>

namespace newsrec
{

using nlohmann::json;

namespace
{

std::string join(const std::vector<std::string>& lines)
{
    std::string out = "invalid configuration";
    for (const auto& l : lines) {
        out += "\n  " + l;
    }
    return out;
}

const std::set<std::string>& known_fields()
{
    static const std::set<std::string> fields = {
        "D",  "D1", "U",      "S",     "pA",     "pS", "R",           "delta",       "theta", "epsilon", "strategy",
        "period", "ties", "Q", "lambda", "x", "recommender", "T", "repetitions", "seed", "injection", "window", "overrides"};
    return fields;
}

/// Reads typed fields and records a diagnostic instead of throwing.
class Reader
{
public:
    explicit Reader(const json& j) : m_j(j) {}

    template <class T>
    void get(const char* name, T& out)
    {
        if (!m_j.contains(name)) {
            return;
        }
        try {
            const auto& v = m_j.at(name);
            if constexpr (std::is_unsigned_v<T>) {
                // integers built in code are signed even when non-negative
                if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
                    throw std::invalid_argument("expected a non-negative integer");
                }
            } else if constexpr (std::is_floating_point_v<T>) {
                if (!v.is_number()) {
                    throw std::invalid_argument("expected a number");
                }
            }
            out = v.get<T>();
        } catch (const std::exception& e) {
            fail(name, e.what());
        }
    }

    template <class T>
    void get_optional(const char* name, std::optional<T>& out)
    {
        if (m_j.contains(name) && m_j.at(name).is_null()) {
            out.reset();
            return;
        }
        if (m_j.contains(name)) {
            T v{};
            const auto before = m_diagnostics.size();
            get(name, v);
            if (m_diagnostics.size() == before) {
                out = v;
            }
        }
    }

    void fail(const std::string& field, const std::string& what) { m_diagnostics.push_back(field + ": " + what); }

    std::vector<std::string>& diagnostics() { return m_diagnostics; }

private:
    const json& m_j;
    std::vector<std::string> m_diagnostics;
};

} // namespace

ConfigError::ConfigError(std::vector<std::string> diagnostics)
    : std::runtime_error(join(diagnostics))
    , m_diagnostics(std::move(diagnostics))
{
}

std::size_t ScenarioConfig::users() const
{
    return U ? *U : static_cast<std::size_t>(binomial(D, D1));
}

json to_json(const ScenarioConfig& c)
{
    json j;
    j["D"] = c.D;
    j["D1"] = c.D1;
    j["U"] = c.U ? json(*c.U) : json(nullptr);
    j["S"] = c.S;
    j["pA"] = c.pA;
    j["pS"] = c.pS;
    j["R"] = c.R;
    j["delta"] = c.delta;
    j["theta"] = c.theta;
    j["epsilon"] = c.epsilon;
    j["strategy"] = to_string(c.strategy);
    j["period"] = c.period ? json(*c.period) : json(nullptr);
    j["ties"] = to_string(c.ties);
    j["Q"] = c.Q;
    j["lambda"] = c.lambda;
    j["x"] = c.x;
    j["recommender"] = to_string(c.recommender);
    j["T"] = c.T;
    j["repetitions"] = c.repetitions;
    j["seed"] = c.seed;
    j["injection"] = {{"count", c.injection.count},
                      {"after_step", c.injection.after_step},
                      {"quality", c.injection.quality}};
    j["window"] = c.window;
    j["overrides"] = json::array();
    for (const auto& o : c.overrides) {
        json e = {{"user", o.user}};
        if (o.activity) {
            e["pA"] = *o.activity;
        }
        if (o.noise) {
            e["x"] = *o.noise;
        }
        j["overrides"].push_back(e);
    }
    return j;
}

ScenarioConfig config_from_json(const json& j)
{
    if (!j.is_object()) {
        throw ConfigError({"<root>: expected a JSON object"});
    }
    ScenarioConfig c;
    Reader r(j);
    for (const auto& [key, value] : j.items()) {
        if (!known_fields().contains(key)) {
            r.fail(key, "unknown field");
        }
    }
    r.get("D", c.D);
    r.get("D1", c.D1);
    r.get_optional("U", c.U);
    r.get("S", c.S);
    r.get("pA", c.pA);
    r.get("pS", c.pS);
    r.get("R", c.R);
    r.get("delta", c.delta);
    r.get("theta", c.theta);
    r.get("epsilon", c.epsilon);
    r.get_optional("period", c.period);
    r.get("Q", c.Q);
    r.get("lambda", c.lambda);
    r.get("x", c.x);
    r.get("T", c.T);
    r.get("repetitions", c.repetitions);
    r.get("seed", c.seed);
    r.get("window", c.window);

    std::string name;
    if (j.contains("strategy")) {
        r.get("strategy", name);
        if (auto s = parse_strategy(name)) {
            c.strategy = *s;
        } else {
            r.fail("strategy", "expected one of optimal, random, bara");
        }
    }
    if (j.contains("ties")) {
        name.clear();
        r.get("ties", name);
        if (auto t = parse_tie_break(name)) {
            c.ties = *t;
        } else {
            r.fail("ties", "expected incumbent or smallest_id");
        }
    }
    if (j.contains("recommender")) {
        name.clear();
        r.get("recommender", name);
        if (auto rec = parse_recommender(name)) {
            c.recommender = *rec;
        } else {
            r.fail("recommender", "expected one of adaptive, random, absPop, relPop");
        }
    }
    if (j.contains("injection")) {
        const auto& inj = j.at("injection");
        if (inj.is_null()) {
            c.injection = {};
        } else if (!inj.is_object()) {
            r.fail("injection", "expected an object with count, after_step, quality");
        } else {
            Reader ri(inj);
            for (const auto& [key, value] : inj.items()) {
                if (key != "count" && key != "after_step" && key != "quality") {
                    ri.fail(key, "unknown field");
                }
            }
            ri.get("count", c.injection.count);
            ri.get("after_step", c.injection.after_step);
            ri.get("quality", c.injection.quality);
            for (const auto& d : ri.diagnostics()) {
                r.diagnostics().push_back("injection." + d);
            }
        }
    }
    if (j.contains("overrides")) {
        const auto& list = j.at("overrides");
        if (!list.is_array()) {
            r.fail("overrides", "expected an array");
        } else {
            for (std::size_t k = 0; k < list.size(); ++k) {
                const auto& e = list[k];
                UserOverride o;
                Reader ro(e);
                if (!e.is_object() || !e.contains("user")) {
                    r.fail("overrides[" + std::to_string(k) + "]", "expected an object with a user id");
                    continue;
                }
                ro.get("user", o.user);
                ro.get_optional("pA", o.activity);
                ro.get_optional("x", o.noise);
                for (const auto& d : ro.diagnostics()) {
                    r.diagnostics().push_back("overrides[" + std::to_string(k) + "]." + d);
                }
                c.overrides.push_back(o);
            }
        }
    }

    // fields that failed to parse kept their defaults, so range checks
    // only report the remaining ones
    auto diagnostics = std::move(r.diagnostics());
    for (auto& d : validate(c)) {
        diagnostics.push_back(std::move(d));
    }
    if (!diagnostics.empty()) {
        throw ConfigError(std::move(diagnostics));
    }
    return c;
}

ScenarioConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError({"config: cannot open " + path});
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError({std::string("config: malformed JSON: ") + e.what()});
    }
    return config_from_json(j);
}

std::vector<std::string> validate(const ScenarioConfig& c)
{
    std::vector<std::string> d;
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (c.D < 2 || c.D > 63) {
        d.push_back("D: must lie in [2, 63]");
    }
    if (c.D1 == 0 || c.D1 >= c.D) {
        d.push_back("D1: must satisfy 0 < D1 < D");
    }
    std::uint64_t total = 0;
    if (d.empty()) {
        try {
            total = binomial(c.D, c.D1);
        } catch (const std::overflow_error&) {
            d.push_back("D: C(D, D1) overflows");
        }
    }
    if (c.U && total != 0) {
        if (*c.U > total) {
            d.push_back("U: exceeds C(D, D1) = " + std::to_string(total));
        }
        if (*c.U < 2) {
            d.push_back("U: need at least 2 users");
        }
    } else if (!c.U && total > 1'000'000) {
        d.push_back("U: C(D, D1) = " + std::to_string(total) + " users is too many; set U");
    }
    if (d.empty() && c.S + 1 > c.users()) {
        d.push_back("S: must be <= U - 1 = " + std::to_string(c.users() - 1));
    }
    if (!prob(c.pA)) {
        d.push_back("pA: must lie in [0, 1]");
    }
    if (!prob(c.pS)) {
        d.push_back("pS: must lie in [0, 1]");
    }
    if (!(c.theta >= 0.0)) {
        d.push_back("theta: must be >= 0");
    }
    if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) {
        d.push_back("epsilon: must lie in (0, 1)");
    }
    if (c.period && *c.period == 0) {
        d.push_back("period: must be >= 1");
    }
    if (!(c.lambda >= 0.0)) {
        d.push_back("lambda: must be >= 0");
    }
    if (!(c.x >= 0.0)) {
        d.push_back("x: must be >= 0");
    }
    if (c.repetitions < 1) {
        d.push_back("repetitions: must be >= 1");
    }
    if (c.window < 1) {
        d.push_back("window: must be >= 1");
    }
    if (c.injection.count > 0) {
        if (c.injection.after_step >= c.T) {
            d.push_back("injection.after_step: must be < T");
        }
        if (!(c.injection.quality > 0.0)) {
            d.push_back("injection.quality: must be > 0");
        }
    }
    for (std::size_t k = 0; k < c.overrides.size(); ++k) {
        const auto& o = c.overrides[k];
        const std::string where = "overrides[" + std::to_string(k) + "]";
        if (d.empty() && o.user >= c.users()) {
            d.push_back(where + ".user: out of range");
        }
        if (o.activity && !prob(*o.activity)) {
            d.push_back(where + ".pA: must lie in [0, 1]");
        }
        if (o.noise && !(*o.noise >= 0.0)) {
            d.push_back(where + ".x: must be >= 0");
        }
    }
    return d;
}

void check(const ScenarioConfig& config)
{
    auto d = validate(config);
    if (!d.empty()) {
        throw ConfigError(std::move(d));
    }
}

std::uint64_t config_hash(const ScenarioConfig& config)
{
    const std::string text = to_json(config).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ScenarioConfig with_parameter(const ScenarioConfig& config, const std::string& name, const json& value)
{
    json j = to_json(config);
    json::json_pointer ptr;
    try {
        std::string path = "/" + name;
        std::replace(path.begin(), path.end(), '.', '/');
        ptr = json::json_pointer(path);
    } catch (const json::exception&) {
        throw ConfigError({name + ": unknown parameter"});
    }
    if (!j.contains(ptr) || name == "overrides" || name == "injection") {
        throw ConfigError({name + ": unknown parameter"});
    }
    j[ptr] = value;
    return config_from_json(j);
}

WorldParams to_world_params(const ScenarioConfig& c)
{
    WorldParams p;
    p.agents.activity = c.pA;
    p.agents.submission = c.pS;
    p.agents.reads = c.R;
    p.agents.threshold = c.delta;
    p.agents.noise = c.x;
    const std::size_t users = c.users();
    for (const auto& o : c.overrides) {
        if (o.activity) {
            if (p.agents.activity_override.empty()) {
                p.agents.activity_override.assign(users, c.pA);
            }
            p.agents.activity_override.at(o.user) = *o.activity;
        }
        if (o.noise) {
            if (p.agents.noise_override.empty()) {
                p.agents.noise_override.assign(users, c.x);
            }
            p.agents.noise_override.at(o.user) = *o.noise;
        }
    }
    p.engine.similarity = {c.theta, c.epsilon};
    p.engine.decay = {c.Q, c.lambda};
    p.authorities = c.S;
    p.strategy = c.strategy;
    p.period = c.resolved_period();
    p.ties = c.ties;
    p.recommender = c.recommender;
    p.popularity_prior = c.epsilon;
    p.injection = c.injection;
    return p;
}

} // namespace newsrec
