#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/error.hpp"
#include "gyro/permutation.hpp"

namespace gyro {

// n-by-n operation table over elements {0..n-1}; entry(a, b) = a (+) b.
//
// Construction checks shape and entry range only. The Latin-square
// property (rows and columns are permutations) and the gyrogroup axioms
// are the business of verify_axioms().
class CayleyTable {
public:
    explicit CayleyTable(const std::vector<std::vector<int>>& rows);

    int order() const { return n_; }

    // Bounds-checked lookup; throws std::out_of_range.
    int entry(int a, int b) const;

    // Unchecked lookup for inner loops.
    int operator()(int a, int b) const { return flat_[a * n_ + b]; }

    const std::vector<int>& flat() const { return flat_; }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
    int n_ = 0;
    std::vector<int> flat_;  // row-major
};

// n-by-n table of gyrations gyr[a,b], each a permutation of {0..n-1}.
// Distinct permutations are interned into a pool; pool index 0 is always
// the identity, and the rest appear in row-major first-use order, which
// is also the order the serializer names them (A, B, C, ...).
class GyrationTable {
public:
    GyrationTable(int order, const std::vector<std::vector<Permutation>>& grid);

    int order() const { return n_; }

    const Permutation& at(int a, int b) const;  // bounds-checked
    const Permutation& operator()(int a, int b) const { return pool_[ids_[a * n_ + b]]; }

    int perm_id(int a, int b) const { return ids_[a * n_ + b]; }
    const std::vector<Permutation>& pool() const { return pool_; }

    bool operator==(const GyrationTable& other) const;

private:
    GyrationTable() = default;
    friend class GyrationTableBuilder;

    int n_ = 0;
    std::vector<Permutation> pool_;  // pool_[0] = identity
    std::vector<int> ids_;           // row-major indices into pool_
};

// Incremental interning used by the validator and the file parser.
class GyrationTableBuilder {
public:
    explicit GyrationTableBuilder(int order);
    void push(const Permutation& p);  // appends in row-major order
    GyrationTable finish();

private:
    GyrationTable table_;
};

// Which check a violation came from.
enum class Axiom {
    latin_row,
    latin_col,
    identity_element,
    inverse_element,
    gyration_mismatch,
    gyration_bijective,
    gyration_automorphism,
    left_gyroassociative,
    left_loop,
    // identity suite (check_identities)
    cancel_left_general,
    cancel_left,
    cancel_right_coadd,
    cancel_right_cosub,
    right_gyroassociative,
    gyration_of_inverse,
};

std::string_view axiom_name(Axiom a);

struct Violation {
    Axiom axiom;
    std::vector<int> witness;  // lexicographically least counterexample tuple
    std::string detail;
};

struct VerificationReport {
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
};

struct ValidationResult;

// A validated finite gyrogroup. Immutable; safe to share across threads.
// Instances only come out of verify_axioms(), so every operation below
// is total on valid indices.
class Gyrogroup {
public:
    int order() const { return table_.order(); }
    int identity() const { return identity_; }
    const std::string& name() const { return name_; }

    int add(int a, int b) const;  // a (+) b
    int neg(int a) const;         // the unique two-sided inverse
    const Permutation& gyr(int a, int b) const;
    int gyr_apply(int a, int b, int c) const;  // gyr[a,b](c)

    int coadd(int a, int b) const;  // a (+) gyr[a, -b](b)
    int cosub(int a, int b) const;  // coadd(a, neg(b))

    // left_nested_product({a,b,c}) = a+(b+c); right_nested_product = (a+b)+c.
    int left_nested_product(std::span<const int> seq) const;
    int right_nested_product(std::span<const int> seq) const;

    const CayleyTable& table() const { return table_; }
    const GyrationTable& gyrations() const { return gyrations_; }
    const std::vector<int>& inverses() const { return inverse_; }

    // Unchecked lookups for inner loops.
    int op(int a, int b) const { return table_(a, b); }
    int gyr_image(int a, int b, int c) const { return gyrations_(a, b)(c); }

    void require_element(int a) const;

private:
    Gyrogroup(CayleyTable table, GyrationTable gyrations, int identity, std::vector<int> inverse,
              std::string name);

    friend ValidationResult verify_axioms(const CayleyTable&, const std::optional<GyrationTable>&,
                                          std::string);

    CayleyTable table_;
    GyrationTable gyrations_;
    int identity_;
    std::vector<int> inverse_;
    std::string name_;
};

struct ValidationResult {
    VerificationReport report;
    std::optional<Gyrogroup> group;  // engaged iff report.passed()
};

// The entry-point validator. Checks, in order: Latin-square rows/columns
// (failure here aborts the rest), two-sided identity, two-sided inverses,
// gyration derivation (cross-checked against `gyrations` when supplied),
// bijectivity and the automorphism property of every gyration, the left
// gyroassociative law, and the left loop property. Each failing check
// contributes its lexicographically least witness; later checks always
// run against the derived gyrations.
ValidationResult verify_axioms(const CayleyTable& table,
                               const std::optional<GyrationTable>& gyrations = std::nullopt,
                               std::string name = "");

// Pointwise gyr[a,b](c) = -(a+b) + (a+(b+c)). Requires a Latin-square
// table with a two-sided identity and two-sided inverses; throws
// GyroError naming the offending element otherwise. Does not check that
// the resulting maps are automorphisms.
GyrationTable derive_gyrations(const CayleyTable& table);

// Exhaustively checks the six classical gyrogroup identities
// (cancellation laws, right gyroassociativity, gyr commuting with
// inversion) over all element tuples. All pass on any validated
// gyrogroup; a violation indicates a corrupted table.
VerificationReport check_identities(const Gyrogroup& g);

}  // namespace gyro
