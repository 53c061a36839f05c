#include "morl/env/model_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace morl {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

std::string save_model(const MomdpModel& model) {
    std::ostringstream out;
    out << "model: " << model.id() << "\n";
    out << "objectives: " << model.objectives() << "\n";
    out << "gamma: " << model.gamma().str() << "\n";
    out << "thresholds:";
    for (const auto& t : model.thresholds_exact()) out << " " << t.str();
    out << "\n";
    for (const auto& st : model.states()) {
        out << "state: " << st.name;
        if (st.kind == StateKind::goal) out << " goal";
        if (st.kind == StateKind::fail) out << " fail";
        out << "\n";
    }
    out << "initial: " << model.state(model.initial()).name << "\n";
    for (const auto& st : model.states()) {
        for (const auto& act : st.actions) {
            out << "action: " << st.name << " " << act.name << "\n";
            for (const auto& o : act.outcomes) {
                out << "outcome: " << o.probability.str() << " " << model.state(o.next).name;
                for (const auto& r : o.reward) out << " " << r.str();
                out << "\n";
            }
        }
    }
    return out.str();
}

MomdpModel load_model(const std::string& text) {
    std::istringstream in(text);
    std::string line;

    std::string id;
    int objectives = 0;
    Rational gamma(1);
    RationalVector thresholds;
    std::vector<StateDef> states;
    std::map<std::string, int> index;
    std::string initial_name;
    int pending_state = -1;  // state owning the open action block
    int line_no = 0;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("model text line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokens(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        if (key == "model:") {
            if (toks.size() != 2) fail("model needs a single id");
            id = toks[1];
        } else if (key == "objectives:") {
            if (toks.size() != 2) fail("objectives needs a count");
            objectives = std::stoi(toks[1]);
        } else if (key == "gamma:") {
            if (toks.size() != 2) fail("gamma needs a value");
            gamma = Rational::from_decimal(toks[1]);
        } else if (key == "thresholds:") {
            thresholds.clear();
            for (size_t i = 1; i < toks.size(); ++i)
                thresholds.push_back(Rational::from_decimal(toks[i]));
        } else if (key == "state:") {
            if (toks.size() < 2 || toks.size() > 3) fail("state needs a name and optional kind");
            StateKind kind = StateKind::decision;
            if (toks.size() == 3) {
                if (toks[2] == "goal")
                    kind = StateKind::goal;
                else if (toks[2] == "fail")
                    kind = StateKind::fail;
                else
                    fail("unknown state kind " + toks[2]);
            }
            if (index.count(toks[1])) fail("duplicate state " + toks[1]);
            index[toks[1]] = static_cast<int>(states.size());
            states.push_back(StateDef{toks[1], kind, {}});
        } else if (key == "initial:") {
            if (toks.size() != 2) fail("initial needs a state name");
            initial_name = toks[1];
        } else if (key == "action:") {
            if (toks.size() != 3) fail("action needs a state and a name");
            auto it = index.find(toks[1]);
            if (it == index.end()) fail("action on unknown state " + toks[1]);
            pending_state = it->second;
            states[pending_state].actions.push_back(ActionDef{toks[2], {}});
        } else if (key == "outcome:") {
            if (pending_state < 0) fail("outcome before any action");
            if (toks.size() < 4) fail("outcome needs probability, next state and rewards");
            Outcome o;
            o.probability = Rational::from_decimal(toks[1]);
            auto it = index.find(toks[2]);
            if (it == index.end()) fail("outcome to unknown state " + toks[2]);
            o.next = it->second;
            for (size_t i = 3; i < toks.size(); ++i)
                o.reward.push_back(Rational::from_decimal(toks[i]));
            states[pending_state].actions.back().outcomes.push_back(std::move(o));
        } else {
            fail("unknown key " + key);
        }
    }
    auto it = index.find(initial_name);
    if (it == index.end()) throw std::invalid_argument("model text: missing or unknown initial state");
    return MomdpModel(id, objectives, gamma, std::move(thresholds), std::move(states), it->second);
}

MomdpModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model(buf.str());
}

void save_model_file(const MomdpModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file " + path);
    out << save_model(model);
    if (!out) throw std::runtime_error("failed writing model file " + path);
}

}  // namespace morl
