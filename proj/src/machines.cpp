#include "flt/machines.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace flt {

std::string kind_name(MachineKind k) {
    switch (k) {
        case MachineKind::Dfa: return "dfa";
        case MachineKind::Ndfa: return "ndfa";
        case MachineKind::Pda: return "pda";
        case MachineKind::Tm: return "tm";
    }
    return "?";
}

std::string result_text(SmResult r) {
    switch (r) {
        case SmResult::Accept: return "accept";
        case SmResult::Reject: return "reject";
        case SmResult::StepLimit: return "step-limit exceeded";
    }
    return "?";
}

std::string tm_config_text(const TmConfig& c) {
    std::string out = "(" + c.state + " " + std::to_string(c.head) + " (";
    for (std::size_t i = 0; i < c.tape.size(); ++i) {
        if (i) out += ' ';
        out += c.tape[i];
    }
    return out + "))";
}

const Alphabet& StateMachine::stack_alphabet() const {
    if (!gamma_) throw Error("no stack alphabet: " + kind_name(kind_) + " has none");
    return *gamma_;
}

bool StateMachine::is_final(const State& s) const {
    return std::find(finals_.begin(), finals_.end(), s) != finals_.end();
}

const std::vector<FsaRule>& StateMachine::fsa_rules() const {
    if (kind_ != MachineKind::Dfa && kind_ != MachineKind::Ndfa)
        throw Error("rules of a " + kind_name(kind_) + " are not fsa rules");
    return fsa_rules_;
}

const std::vector<PdaRule>& StateMachine::pda_rules() const {
    if (kind_ != MachineKind::Pda)
        throw Error("rules of a " + kind_name(kind_) + " are not pda rules");
    return pda_rules_;
}

const std::vector<TmRule>& StateMachine::tm_rules() const {
    if (kind_ != MachineKind::Tm)
        throw Error("rules of a " + kind_name(kind_) + " are not tm rules");
    return tm_rules_;
}

namespace {

std::unordered_set<std::string> check_states(const std::vector<State>& states) {
    if (states.empty()) throw Error("state set must not be empty");
    std::unordered_set<std::string> set;
    for (const State& s : states) {
        require_token(s, "state");
        if (!set.insert(s).second) throw Error("duplicate state '" + s + "'");
    }
    return set;
}

void check_designations(const std::unordered_set<std::string>& states, const State& start,
                        const std::vector<State>& finals) {
    if (states.count(start) == 0)
        throw Error("bad designation: start state '" + start + "' not in state set");
    std::unordered_set<std::string> seen;
    for (const State& f : finals) {
        if (states.count(f) == 0)
            throw Error("bad designation: final state '" + f + "' not in state set");
        if (!seen.insert(f).second) throw Error("duplicate final state '" + f + "'");
    }
}

void check_rule_state(const std::unordered_set<std::string>& states, const State& s) {
    if (states.count(s) == 0)
        throw Error("unknown component: rule references state '" + s + "'");
}

void check_rule_symbol(const Alphabet& sigma, const Symbol& s, bool allow_emp,
                       bool allow_blank) {
    if (sigma.contains(s)) return;
    if (allow_emp && s == EMP) return;
    if (allow_blank && s == BLANK) return;
    throw Error("unknown component: rule references symbol '" + s + "'");
}

} // namespace

StateMachine make_dfa(std::vector<State> states, Alphabet sigma, State start,
                      std::vector<State> finals, std::vector<FsaRule> rules) {
    auto state_set = check_states(states);
    check_designations(state_set, start, finals);
    std::set<std::pair<State, Symbol>> seen;
    for (const FsaRule& r : rules) {
        check_rule_state(state_set, r.from);
        check_rule_state(state_set, r.to);
        check_rule_symbol(sigma, r.read, false, false);
        if (!seen.insert({r.from, r.read}).second)
            throw Error("nondeterministic dfa: duplicate rule for (" + r.from + ", " + r.read +
                        ")");
    }
    for (const State& s : states)
        for (const Symbol& a : sigma)
            if (seen.count({s, a}) == 0)
                throw Error("partial dfa: missing rule for (" + s + ", " + a + ")");

    StateMachine m;
    m.kind_ = MachineKind::Dfa;
    m.states_ = std::move(states);
    m.sigma_ = std::move(sigma);
    m.start_ = std::move(start);
    m.finals_ = std::move(finals);
    m.fsa_rules_ = std::move(rules);
    return m;
}

StateMachine make_ndfa(std::vector<State> states, Alphabet sigma, State start,
                       std::vector<State> finals, std::vector<FsaRule> rules) {
    auto state_set = check_states(states);
    check_designations(state_set, start, finals);
    std::vector<FsaRule> kept;
    for (const FsaRule& r : rules) {
        check_rule_state(state_set, r.from);
        check_rule_state(state_set, r.to);
        check_rule_symbol(sigma, r.read, true, false);
        if (std::find(kept.begin(), kept.end(), r) == kept.end()) kept.push_back(r);
    }

    StateMachine m;
    m.kind_ = MachineKind::Ndfa;
    m.states_ = std::move(states);
    m.sigma_ = std::move(sigma);
    m.start_ = std::move(start);
    m.finals_ = std::move(finals);
    m.fsa_rules_ = std::move(kept);
    return m;
}

StateMachine make_pda(std::vector<State> states, Alphabet sigma, Alphabet gamma, State start,
                      std::vector<State> finals, std::vector<PdaRule> rules) {
    auto state_set = check_states(states);
    check_designations(state_set, start, finals);
    std::vector<PdaRule> kept;
    for (const PdaRule& r : rules) {
        check_rule_state(state_set, r.from);
        check_rule_state(state_set, r.to);
        check_rule_symbol(sigma, r.read, true, false);
        for (const Symbol& g : r.pop)
            if (!gamma.contains(g))
                throw Error("unknown component: rule pops stack symbol '" + g + "'");
        for (const Symbol& g : r.push)
            if (!gamma.contains(g))
                throw Error("unknown component: rule pushes stack symbol '" + g + "'");
        if (std::find(kept.begin(), kept.end(), r) == kept.end()) kept.push_back(r);
    }

    StateMachine m;
    m.kind_ = MachineKind::Pda;
    m.states_ = std::move(states);
    m.sigma_ = std::move(sigma);
    m.gamma_ = std::move(gamma);
    m.start_ = std::move(start);
    m.finals_ = std::move(finals);
    m.pda_rules_ = std::move(kept);
    return m;
}

StateMachine make_tm(std::vector<State> states, Alphabet sigma, std::vector<TmRule> rules,
                     State start, std::vector<State> finals) {
    auto state_set = check_states(states);
    check_designations(state_set, start, finals);
    std::vector<TmRule> kept;
    for (const TmRule& r : rules) {
        check_rule_state(state_set, r.from);
        check_rule_state(state_set, r.to);
        check_rule_symbol(sigma, r.read, false, true);
        if (r.action.kind == TmActionKind::Write)
            check_rule_symbol(sigma, r.action.write, false, true);
        if (std::find(kept.begin(), kept.end(), r) == kept.end()) kept.push_back(r);
    }

    StateMachine m;
    m.kind_ = MachineKind::Tm;
    m.states_ = std::move(states);
    m.sigma_ = std::move(sigma);
    m.start_ = std::move(start);
    m.finals_ = std::move(finals);
    m.tm_rules_ = std::move(kept);
    return m;
}

StateMachine make_dfa(std::vector<State> states, std::vector<Symbol> sigma, State start,
                      std::vector<State> finals, std::vector<FsaRule> rules) {
    return make_dfa(std::move(states), Alphabet(std::move(sigma)), std::move(start),
                    std::move(finals), std::move(rules));
}

StateMachine make_ndfa(std::vector<State> states, std::vector<Symbol> sigma, State start,
                       std::vector<State> finals, std::vector<FsaRule> rules) {
    return make_ndfa(std::move(states), Alphabet(std::move(sigma)), std::move(start),
                     std::move(finals), std::move(rules));
}

StateMachine make_pda(std::vector<State> states, std::vector<Symbol> sigma,
                      std::vector<Symbol> gamma, State start, std::vector<State> finals,
                      std::vector<PdaRule> rules) {
    return make_pda(std::move(states), Alphabet(std::move(sigma)), Alphabet(std::move(gamma)),
                    std::move(start), std::move(finals), std::move(rules));
}

StateMachine make_tm(std::vector<State> states, std::vector<Symbol> sigma,
                     std::vector<TmRule> rules, State start, std::vector<State> finals) {
    return make_tm(std::move(states), Alphabet(std::move(sigma)), std::move(rules),
                   std::move(start), std::move(finals));
}

namespace {

void check_word(const StateMachine& m, const Word& w) {
    bool allow_blank = m.kind() == MachineKind::Tm;
    for (const Symbol& s : w) {
        if (m.alphabet().contains(s)) continue;
        if (allow_blank && s == BLANK) continue;
        throw Error("word not over alphabet: symbol '" + s + "'");
    }
}

// --- finite automata -------------------------------------------------------

struct FsaSearch {
    struct Node {
        State state;
        std::size_t pos;
        long parent;
    };
    std::vector<Node> nodes;
    long accepting = -1;
};

FsaSearch fsa_bfs(const StateMachine& m, const Word& w) {
    FsaSearch search;
    std::set<std::pair<State, std::size_t>> visited;
    std::deque<long> queue;

    search.nodes.push_back({m.start(), 0, -1});
    visited.insert({m.start(), 0});
    queue.push_back(0);

    while (!queue.empty()) {
        long id = queue.front();
        queue.pop_front();
        auto node = search.nodes[static_cast<std::size_t>(id)];
        if (node.pos == w.size() && m.is_final(node.state)) {
            search.accepting = id;
            return search;
        }
        for (const FsaRule& r : m.fsa_rules()) {
            if (r.from != node.state) continue;
            std::size_t next_pos = node.pos;
            if (r.read == EMP) {
                // epsilon move, nothing consumed
            } else if (node.pos < w.size() && w[node.pos] == r.read) {
                next_pos = node.pos + 1;
            } else {
                continue;
            }
            if (!visited.insert({r.to, next_pos}).second) continue;
            search.nodes.push_back({r.to, next_pos, id});
            queue.push_back(static_cast<long>(search.nodes.size()) - 1);
        }
    }
    return search;
}

// --- pushdown automata ------------------------------------------------------

struct PdaNode {
    State state;
    std::size_t pos;
    std::vector<Symbol> stack; // top first
    std::size_t depth;
    long parent;
};

struct PdaSearch {
    std::vector<PdaNode> nodes;
    long accepting = -1;
};

PdaSearch pda_bfs(const StateMachine& m, const Word& w, const SimOptions& opts) {
    const std::size_t bound = opts.pda_bound_factor * (w.size() + 1) * m.states().size();
    PdaSearch search;
    std::set<std::tuple<State, std::size_t, std::vector<Symbol>>> visited;
    std::deque<long> queue;

    search.nodes.push_back({m.start(), 0, {}, 0, -1});
    visited.insert({m.start(), 0, {}});
    queue.push_back(0);

    while (!queue.empty()) {
        long id = queue.front();
        queue.pop_front();
        auto node = search.nodes[static_cast<std::size_t>(id)];
        if (node.pos == w.size() && m.is_final(node.state)) {
            search.accepting = id;
            return search;
        }
        if (node.depth >= bound) continue;
        for (const PdaRule& r : m.pda_rules()) {
            if (r.from != node.state) continue;
            std::size_t next_pos = node.pos;
            if (r.read != EMP) {
                if (node.pos >= w.size() || w[node.pos] != r.read) continue;
                next_pos = node.pos + 1;
            }
            if (r.pop.size() > node.stack.size()) continue;
            if (!std::equal(r.pop.begin(), r.pop.end(), node.stack.begin())) continue;
            std::vector<Symbol> next_stack = r.push;
            next_stack.insert(next_stack.end(), node.stack.begin() + static_cast<long>(r.pop.size()),
                              node.stack.end());
            if (!visited.insert({r.to, next_pos, next_stack}).second) continue;
            search.nodes.push_back({r.to, next_pos, std::move(next_stack), node.depth + 1, id});
            queue.push_back(static_cast<long>(search.nodes.size()) - 1);
        }
    }
    return search;
}

// --- turing machines --------------------------------------------------------

struct TmNode {
    TmConfig config;
    std::size_t depth;
    long parent;
};

struct TmSearch {
    std::vector<TmNode> nodes;
    long accepting = -1;
    bool truncated = false; // some live path hit the step limit
};

std::vector<Symbol> normalized_tape(const Word& w, std::size_t head) {
    std::vector<Symbol> tape = w;
    while (head >= tape.size()) tape.push_back(BLANK);
    return tape;
}

std::string tm_key(const TmConfig& c) {
    std::string key = c.state + "#" + std::to_string(c.head);
    for (const Symbol& s : c.tape) {
        key += '|';
        key += s;
    }
    return key;
}

TmSearch tm_bfs(const StateMachine& m, const Word& w, std::size_t head,
                const SimOptions& opts) {
    TmSearch search;
    std::unordered_set<std::string> visited;
    std::deque<long> queue;

    TmConfig start_config{m.start(), head, normalized_tape(w, head)};
    visited.insert(tm_key(start_config));
    search.nodes.push_back({std::move(start_config), 0, -1});
    queue.push_back(0);

    while (!queue.empty()) {
        long id = queue.front();
        queue.pop_front();
        auto node = search.nodes[static_cast<std::size_t>(id)];
        if (m.is_final(node.config.state)) {
            search.accepting = id;
            return search;
        }
        bool has_successor = false;
        for (const TmRule& r : m.tm_rules()) {
            if (r.from != node.config.state) continue;
            if (r.read != node.config.tape[node.config.head]) continue;
            has_successor = true;
            if (node.depth >= opts.tm_step_limit) {
                search.truncated = true;
                break;
            }
            TmConfig next = node.config;
            next.state = r.to;
            switch (r.action.kind) {
                case TmActionKind::Write:
                    next.tape[next.head] = r.action.write;
                    break;
                case TmActionKind::MoveLeft:
                    if (next.head == 0) throw Error("fell off tape: head moved left of cell 0");
                    --next.head;
                    break;
                case TmActionKind::MoveRight:
                    ++next.head;
                    if (next.head == next.tape.size()) next.tape.push_back(BLANK);
                    break;
            }
            if (!visited.insert(tm_key(next)).second) continue;
            search.nodes.push_back({std::move(next), node.depth + 1, id});
            queue.push_back(static_cast<long>(search.nodes.size()) - 1);
        }
        (void)has_successor;
    }
    return search;
}

Word remaining_input(const Word& w, std::size_t pos) {
    return Word(w.begin() + static_cast<long>(pos), w.end());
}

} // namespace

SmResult apply_sm(const StateMachine& m, const Word& w, std::size_t head,
                  const SimOptions& opts) {
    check_word(m, w);
    if (m.kind() != MachineKind::Tm && head != 0)
        throw Error("head position is only meaningful for a tm");
    switch (m.kind()) {
        case MachineKind::Dfa:
        case MachineKind::Ndfa:
            return fsa_bfs(m, w).accepting >= 0 ? SmResult::Accept : SmResult::Reject;
        case MachineKind::Pda:
            return pda_bfs(m, w, opts).accepting >= 0 ? SmResult::Accept : SmResult::Reject;
        case MachineKind::Tm: {
            auto search = tm_bfs(m, w, head, opts);
            if (search.accepting >= 0) return SmResult::Accept;
            return search.truncated ? SmResult::StepLimit : SmResult::Reject;
        }
    }
    throw Error("unreachable machine kind");
}

Trace show_transitions_sm(const StateMachine& m, const Word& w, std::size_t head,
                          const SimOptions& opts) {
    check_word(m, w);
    if (m.kind() != MachineKind::Tm && head != 0)
        throw Error("head position is only meaningful for a tm");
    Trace trace;
    switch (m.kind()) {
        case MachineKind::Dfa:
        case MachineKind::Ndfa: {
            auto search = fsa_bfs(m, w);
            if (search.accepting < 0) return trace;
            std::vector<TraceStep> steps;
            for (long id = search.accepting; id >= 0;
                 id = search.nodes[static_cast<std::size_t>(id)].parent) {
                const auto& node = search.nodes[static_cast<std::size_t>(id)];
                steps.push_back({node.state, remaining_input(w, node.pos), {}, std::nullopt});
            }
            std::reverse(steps.begin(), steps.end());
            trace.result = SmResult::Accept;
            trace.steps = std::move(steps);
            return trace;
        }
        case MachineKind::Pda: {
            auto search = pda_bfs(m, w, opts);
            if (search.accepting < 0) return trace;
            std::vector<TraceStep> steps;
            for (long id = search.accepting; id >= 0;
                 id = search.nodes[static_cast<std::size_t>(id)].parent) {
                const auto& node = search.nodes[static_cast<std::size_t>(id)];
                steps.push_back({node.state, remaining_input(w, node.pos), node.stack,
                                 std::nullopt});
            }
            std::reverse(steps.begin(), steps.end());
            trace.result = SmResult::Accept;
            trace.steps = std::move(steps);
            return trace;
        }
        case MachineKind::Tm: {
            auto search = tm_bfs(m, w, head, opts);
            if (search.accepting < 0) {
                trace.result = search.truncated ? SmResult::StepLimit : SmResult::Reject;
                return trace;
            }
            std::vector<TraceStep> steps;
            for (long id = search.accepting; id >= 0;
                 id = search.nodes[static_cast<std::size_t>(id)].parent) {
                const auto& node = search.nodes[static_cast<std::size_t>(id)];
                steps.push_back({node.config.state, {}, {}, node.config});
            }
            std::reverse(steps.begin(), steps.end());
            trace.result = SmResult::Accept;
            trace.steps = std::move(steps);
            return trace;
        }
    }
    throw Error("unreachable machine kind");
}

} // namespace flt
