// State machine constructors (dfa/ndfa/pda/tm), component accessors, and the
// breadth-first applicator and trace observers.

#pragma once

#include <optional>
#include <vector>

#include "flt/core.hpp"

namespace flt {

enum class MachineKind { Dfa, Ndfa, Pda, Tm };

std::string kind_name(MachineKind k);

// (from read to); read may be EMP in an ndfa.
struct FsaRule {
    State from;
    Symbol read;
    State to;

    bool operator==(const FsaRule&) const = default;
};

// ((from read pop) (to push)); pop and push are stack-symbol sequences read
// top first, either possibly empty.
struct PdaRule {
    State from;
    Symbol read; // symbol or EMP
    std::vector<Symbol> pop;
    State to;
    std::vector<Symbol> push;

    bool operator==(const PdaRule&) const = default;
};

enum class TmActionKind { Write, MoveLeft, MoveRight };

struct TmAction {
    TmActionKind kind = TmActionKind::Write;
    Symbol write; // meaningful only for Write

    static TmAction write_symbol(Symbol s) { return {TmActionKind::Write, std::move(s)}; }
    static TmAction move_left() { return {TmActionKind::MoveLeft, {}}; }
    static TmAction move_right() { return {TmActionKind::MoveRight, {}}; }

    bool operator==(const TmAction&) const = default;
};

// ((from read) (to action)); read is a symbol or BLANK.
struct TmRule {
    State from;
    Symbol read;
    State to;
    TmAction action;

    bool operator==(const TmRule&) const = default;
};

// Tape is extended with BLANK on demand; head always addresses a cell.
struct TmConfig {
    State state;
    std::size_t head = 0;
    std::vector<Symbol> tape;

    bool operator==(const TmConfig&) const = default;
};

std::string tm_config_text(const TmConfig& c); // "(h 7 (add1 _ I I I I I _))"

class StateMachine {
public:
    MachineKind kind() const { return kind_; }
    const std::vector<State>& states() const { return states_; }
    const Alphabet& alphabet() const { return sigma_; }
    // Only a pda carries a stack alphabet; anything else throws.
    const Alphabet& stack_alphabet() const;
    const State& start() const { return start_; }
    const std::vector<State>& finals() const { return finals_; }
    bool is_final(const State& s) const;

    const std::vector<FsaRule>& fsa_rules() const;
    const std::vector<PdaRule>& pda_rules() const;
    const std::vector<TmRule>& tm_rules() const;

private:
    MachineKind kind_ = MachineKind::Dfa;
    std::vector<State> states_;
    Alphabet sigma_;
    std::optional<Alphabet> gamma_;
    State start_;
    std::vector<State> finals_;
    std::vector<FsaRule> fsa_rules_;
    std::vector<PdaRule> pda_rules_;
    std::vector<TmRule> tm_rules_;

    friend StateMachine make_dfa(std::vector<State>, Alphabet, State, std::vector<State>,
                                 std::vector<FsaRule>);
    friend StateMachine make_ndfa(std::vector<State>, Alphabet, State, std::vector<State>,
                                  std::vector<FsaRule>);
    friend StateMachine make_pda(std::vector<State>, Alphabet, Alphabet, State,
                                 std::vector<State>, std::vector<PdaRule>);
    friend StateMachine make_tm(std::vector<State>, Alphabet, std::vector<TmRule>, State,
                                std::vector<State>);
};

// Every constructor validates its formal description: designated states must
// exist, rules may only reference declared components, and a dfa rule set
// must be a total function on states x alphabet.
StateMachine make_dfa(std::vector<State> states, Alphabet sigma, State start,
                      std::vector<State> finals, std::vector<FsaRule> rules);
StateMachine make_ndfa(std::vector<State> states, Alphabet sigma, State start,
                       std::vector<State> finals, std::vector<FsaRule> rules);
StateMachine make_pda(std::vector<State> states, Alphabet sigma, Alphabet gamma, State start,
                      std::vector<State> finals, std::vector<PdaRule> rules);
StateMachine make_tm(std::vector<State> states, Alphabet sigma, std::vector<TmRule> rules,
                     State start, std::vector<State> finals);

// Convenience overloads taking raw symbol lists.
StateMachine make_dfa(std::vector<State> states, std::vector<Symbol> sigma, State start,
                      std::vector<State> finals, std::vector<FsaRule> rules);
StateMachine make_ndfa(std::vector<State> states, std::vector<Symbol> sigma, State start,
                       std::vector<State> finals, std::vector<FsaRule> rules);
StateMachine make_pda(std::vector<State> states, std::vector<Symbol> sigma,
                      std::vector<Symbol> gamma, State start, std::vector<State> finals,
                      std::vector<PdaRule> rules);
StateMachine make_tm(std::vector<State> states, std::vector<Symbol> sigma,
                     std::vector<TmRule> rules, State start, std::vector<State> finals);

enum class SmResult { Accept, Reject, StepLimit };

std::string result_text(SmResult r); // accept / reject / step-limit exceeded

struct SimOptions {
    // A tm halts with StepLimit once some unexplored path reaches this depth.
    std::size_t tm_step_limit = 10000;
    // Pda paths are cut off at pda_bound_factor * (|w|+1) * |states|; a word
    // with no accepting path within the bound is rejected.
    std::size_t pda_bound_factor = 10;
};

// One snapshot along an accepting path. Fsa steps carry the unread input,
// pda steps additionally the stack (top first), tm steps the configuration.
struct TraceStep {
    State state;
    Word remaining;
    std::vector<Symbol> stack;
    std::optional<TmConfig> config;
};

struct Trace {
    SmResult result = SmResult::Reject;
    std::vector<TraceStep> steps; // non-empty exactly when result is Accept

    bool accepted() const { return result == SmResult::Accept; }
};

// Breadth-first search over machine configurations; a visited set keeps
// epsilon cycles finite. For a tm the word is the initial tape content and
// head the initial position.
SmResult apply_sm(const StateMachine& m, const Word& w, std::size_t head = 0,
                  const SimOptions& opts = {});

// Same search, but reports one accepting path; the trace is empty when every
// path ends in a non-accepting state.
Trace show_transitions_sm(const StateMachine& m, const Word& w, std::size_t head = 0,
                          const SimOptions& opts = {});

} // namespace flt
