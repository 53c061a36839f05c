#include "morl/harness/config_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace morl {

namespace {

std::string fmt(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(const std::string& text) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed number: " + text);
    return v;
}

long parse_long(const std::string& text) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed integer: " + text);
    return v;
}

bool parse_bool(const std::string& text) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw std::invalid_argument("malformed flag (want true/false): " + text);
}

std::string chain_text(const ChainSpec& chain) {
    std::string out;
    for (size_t i = 0; i < chain.legs.size(); ++i) {
        const ChainLeg& leg = chain.legs[i];
        if (i) out += "|";
        out += leg.action + "," + leg.success_probability.str() + "," +
               leg.success_reward[0].str() + "," + leg.success_reward[1].str() + "," +
               leg.failure_reward[0].str() + "," + leg.failure_reward[1].str() + "," +
               (leg.failure_penalty ? "penalty" : "plain");
    }
    return out;
}

ChainSpec parse_chain(const std::string& text) {
    ChainSpec chain;
    std::istringstream legs(text);
    std::string leg_text;
    while (std::getline(legs, leg_text, '|')) {
        std::istringstream fields(leg_text);
        std::string field;
        std::vector<std::string> parts;
        while (std::getline(fields, field, ',')) parts.push_back(field);
        if (parts.size() != 7)
            throw std::invalid_argument("chain leg needs 7 comma-separated fields: " + leg_text);
        ChainLeg leg;
        leg.action = parts[0];
        leg.success_probability = Rational::from_decimal(parts[1]);
        leg.success_reward = {Rational::from_decimal(parts[2]), Rational::from_decimal(parts[3])};
        leg.failure_reward = {Rational::from_decimal(parts[4]), Rational::from_decimal(parts[5])};
        if (parts[6] == "penalty")
            leg.failure_penalty = true;
        else if (parts[6] == "plain")
            leg.failure_penalty = false;
        else
            throw std::invalid_argument("chain leg flag must be penalty or plain: " + parts[6]);
        chain.legs.push_back(std::move(leg));
    }
    if (chain.legs.empty()) throw std::invalid_argument("empty chain");
    return chain;
}

}  // namespace

std::string serialize_spec(const ExperimentSpec& spec) {
    std::ostringstream out;
    out << "algorithm: " << spec.algorithm << "\n";
    out << "environment: " << spec.environment << "\n";
    out << "chain: " << chain_text(spec.chain) << "\n";
    out << "trials: " << spec.trials << "\n";
    out << "episodes: " << spec.episodes << "\n";
    out << "seed: " << spec.seed << "\n";
    out << "out: " << spec.out_dir << "\n";
    out << "jobs: " << spec.jobs << "\n";
    out << "alpha: " << fmt(spec.alpha) << "\n";
    out << "alpha-final: " << fmt(spec.alpha_final) << "\n";
    out << "decay: " << (spec.decay ? "true" : "false") << "\n";
    out << "gamma: " << fmt(spec.gamma) << "\n";
    out << "lambda: " << fmt(spec.lambda) << "\n";
    out << "temp-initial: " << fmt(spec.temp_initial) << "\n";
    out << "temp-final: " << fmt(spec.temp_final) << "\n";
    out << "epsilon: " << fmt(spec.epsilon) << "\n";
    out << "dd: " << spec.dd << "\n";
    out << "dl: " << spec.dl << "\n";
    out << "grid: " << fmt(spec.grid) << "\n";
    out << "q-init: " << fmt(spec.q_init) << "\n";
    return out.str();
}

ExperimentSpec parse_spec(const std::string& text) {
    ExperimentSpec spec;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key: value");
        std::string key = line.substr(first, colon - first);
        std::string value = line.substr(colon + 1);
        auto begin = value.find_first_not_of(" \t");
        auto end = value.find_last_not_of(" \t\r");
        value = begin == std::string::npos ? "" : value.substr(begin, end - begin + 1);

        if (key == "algorithm") spec.algorithm = value;
        else if (key == "environment") spec.environment = value;
        else if (key == "chain") spec.chain = parse_chain(value);
        else if (key == "trials") spec.trials = parse_long(value);
        else if (key == "episodes") spec.episodes = parse_long(value);
        else if (key == "seed") spec.seed = static_cast<std::uint64_t>(std::stoull(value));
        else if (key == "out") spec.out_dir = value;
        else if (key == "jobs") spec.jobs = static_cast<int>(parse_long(value));
        else if (key == "alpha") spec.alpha = parse_double(value);
        else if (key == "alpha-final") spec.alpha_final = parse_double(value);
        else if (key == "decay") spec.decay = parse_bool(value);
        else if (key == "gamma") spec.gamma = parse_double(value);
        else if (key == "lambda") spec.lambda = parse_double(value);
        else if (key == "temp-initial") spec.temp_initial = parse_double(value);
        else if (key == "temp-final") spec.temp_final = parse_double(value);
        else if (key == "epsilon") spec.epsilon = parse_double(value);
        else if (key == "dd") spec.dd = parse_long(value);
        else if (key == "dl") spec.dl = parse_long(value);
        else if (key == "grid") spec.grid = parse_double(value);
        else if (key == "q-init") spec.q_init = parse_double(value);
        else
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": unknown key " + key);
    }
    return spec;
}

ExperimentSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string manifest_text(const ExperimentSpec& spec, const std::string& status) {
    return serialize_spec(spec) + "status: " + status + "\n";
}

}  // namespace morl
