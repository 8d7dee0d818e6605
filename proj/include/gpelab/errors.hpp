#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace gpelab {

/// Caller broke an operation's precondition (wrong representation, size mismatch, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input is technically valid but makes the requested quantity meaningless.
class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frequency argument too close to zero for a display that divides by |xi|.
class SingularInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sampling region admits no points at the requested scale.
class InfeasibleRegion : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite values appeared during time stepping.
class BlowUp : public std::runtime_error {
public:
    BlowUp(double time, const std::string& what)
        : std::runtime_error(what), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

// Warnings are routed through a replaceable sink (stderr by default).
using WarningSink = std::function<void(const std::string&)>;
void set_warning_sink(WarningSink sink);
void warn(const std::string& message);

}  // namespace gpelab
