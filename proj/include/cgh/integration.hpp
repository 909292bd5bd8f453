#pragma once

#include "cgh/curve.hpp"
#include "cgh/differential.hpp"
#include "cgh/padic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgh {

enum class ReductionRequirement { GoodOdd, Any };

struct BackendCapabilities {
    bool supports_kind2 = false;
    bool supports_kind3 = false;
    ReductionRequirement reduction = ReductionRequirement::Any;
};

// A source of p-adic line integrals on a fixed curve. Backends declare what
// they can do and refuse anything else with CapabilityError.
class IntegrationBackend {
public:
    virtual ~IntegrationBackend() = default;

    virtual std::string name() const = 0;
    virtual BackendCapabilities capabilities() const = 0;
    virtual const HyperellipticCurve& curve() const = 0;
    virtual std::uint32_t prime() const = 0;
    virtual int precision() const = 0;
    virtual const LogBranch& branch() const = 0;

    // The integral of w from P to Q.
    virtual PadicNumber integrate(const Differential& w, const CurvePoint& P, const CurvePoint& Q) const = 0;
    // sum n_i * integral of w over D, written as a sum of paths between the
    // points of D (degree zero makes this basepoint free).
    virtual PadicNumber integrate_divisor(const Differential& w, const Divisor0& D) const;

protected:
    // Rejects forms whose kind falls outside capabilities().
    void check_kind(const Differential& w) const;
};

// Splits D into weighted paths (from, to). Points are paired with their
// image under the involution first, then in sort order.
struct WeightedPath {
    CurvePoint from, to;
    long weight;
};
std::vector<WeightedPath> divisor_paths(const Divisor0& D);

// The key (polar part + exact x^i dx/2y part) of a differential with an
// exact non-invariant part.
FormKey exact_form_key(const Differential& w);
// Key of omega_i = x^i dx/2y.
FormKey omega_form_key(int i);

// Recorded integrals: exact key lookups only, never extrapolated.
struct OracleEntry {
    std::string form; // as written in the table
    FormKey key;
    CurvePoint from, to;
    PadicNumber value;
};

class OracleTable {
public:
    OracleTable(HyperellipticCurve C, std::uint32_t p, int prec, LogBranch branch, std::vector<OracleEntry> entries);

    // Parses the JSON document {curve, p, N, branch, entries: [...]}.
    static OracleTable from_json_text(const std::string& text);
    static OracleTable load(const std::string& path);

    const HyperellipticCurve& curve() const { return curve_; }
    std::uint32_t prime() const { return p_; }
    int precision() const { return prec_; }
    const LogBranch& branch() const { return branch_; }
    const std::vector<OracleEntry>& entries() const { return entries_; }

    // The recorded value of the form with this key from P to Q; a reversed
    // entry is used with the opposite sign.
    std::optional<PadicNumber> lookup(const FormKey& key, const CurvePoint& P, const CurvePoint& Q) const;

    std::string to_json_text() const;

private:
    HyperellipticCurve curve_;
    std::uint32_t p_;
    int prec_;
    LogBranch branch_;
    std::vector<OracleEntry> entries_;
};

// Replays an OracleTable. The table branch must equal the requested branch.
// A form is matched as a whole first; otherwise its polar part and each
// x^i dx/2y term are looked up separately. The invariant part v(x) dx/2 is
// integrated exactly.
class OracleBackend : public IntegrationBackend {
public:
    OracleBackend(OracleTable table, const LogBranch& branch);

    std::string name() const override { return "oracle"; }
    BackendCapabilities capabilities() const override { return {true, true, ReductionRequirement::Any}; }
    const HyperellipticCurve& curve() const override { return table_.curve(); }
    std::uint32_t prime() const override { return table_.prime(); }
    int precision() const override { return table_.precision(); }
    const LogBranch& branch() const override { return table_.branch(); }
    const OracleTable& table() const { return table_; }

    PadicNumber integrate(const Differential& w, const CurvePoint& P, const CurvePoint& Q) const override;

private:
    PadicNumber require(const FormKey& key, const CurvePoint& P, const CurvePoint& Q) const;
    OracleTable table_;
};

// V(x(Q)) - V(x(P)) for the invariant form v(x) dx/2, V' = v/2.
PadicNumber integrate_invariant(const Poly<Rational>& v, const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int prec);

} // namespace cgh
