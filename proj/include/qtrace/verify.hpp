#ifndef QTRACE_VERIFY_HPP
#define QTRACE_VERIFY_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace qtrace {

/*
  Outcome of checking one identity at one n. A failing report always
  carries a re-checkable counterexample (the witness and both mismatching
  values); note holds pass-side detail such as instance counts.
*/
struct VerificationReport {
    std::string identity;
    int n = 0;
    bool pass = true;
    std::string counterexample;
    std::string note;
    double seconds = 0.0;

    std::string to_line() const;
    nlohmann::json to_json() const;
};

// Suite names accepted by run_verification, in emission order.
const std::vector<std::string>& verification_suites();

// Run one named suite at the given n ("all" runs every suite) and return
// one report per identity, sorted as emitted. Unknown names are rejected.
std::vector<VerificationReport> run_verification(const std::string& suite, int n);

} // namespace qtrace

#endif
