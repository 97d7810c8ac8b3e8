#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bordism/partitions.hpp"
#include "bordism/symm.hpp"

namespace bordism {

// Dold manifold P(m, n) = (S^m x CP^n)/±; RP^k is P(k, 0)
struct Atom {
    int m = 0, n = 0;

    static Atom rp(int k);
    static Atom dold_pair(int m, int n);
    static Atom dold(int i);  // D_i for odd non-dyadic i

    int dimension() const { return m + 2 * n; }
    bool is_rp() const { return n == 0; }
    auto operator<=>(const Atom&) const = default;
};

std::string to_string(const Atom& a);

// disjoint union of products
struct ManifoldExpression {
    std::vector<std::vector<Atom>> summands;  // each product sorted

    static ManifoldExpression product(std::vector<Atom> atoms);
    int dimension() const;  // throws if summands disagree; 0 for the empty union
    ManifoldExpression& operator+=(const ManifoldExpression& o);
    friend ManifoldExpression operator+(ManifoldExpression a, const ManifoldExpression& b) { return a += b; }
    friend ManifoldExpression operator*(const ManifoldExpression& a, const ManifoldExpression& b);
};

std::string to_string(const ManifoldExpression& e);

struct ParseError : std::invalid_argument {
    size_t position;
    ParseError(const std::string& what, size_t pos);
};

// "RP4 x RP2^2 + D5^2 + P(1,2)"; also accepts *, × and ⊔
ManifoldExpression parse_manifold(std::string_view text);

// "Y14 Y5^2 + Y13 Y11" as a combination of partitions; Y_{14} and Y14^{2} also accepted
PartitionCombination parse_y_expression(std::string_view text);

enum class Bundle { Tangent, Normal };

// ⟨P_λ(w), [M]⟩ for every partition λ of dim M, as the set of λ with value 1
PartitionCombination p_numbers(const ManifoldExpression& e, Bundle b, Symm& symm);

// ⟨w_mono, [M]⟩ with tangent classes; mono lists the indices of the w's
bool sw_number(const ManifoldExpression& e, const Partition& mono, Symm& symm);

// Y-coordinates of [M]: the non-dyadic λ with ⟨P_λ(w̄), [M]⟩ = 1
PartitionCombination thom_class(const ManifoldExpression& e, Symm& symm);

// w1(D_i) = 0
bool orientability_check(int i);

struct TableRow {
    std::string element;   // Y-expression
    std::string manifold;  // manifold grammar
};

const std::vector<TableRow>& thom_generator_table();  // Y2..Y17
const std::vector<TableRow>& dold_square_table();     // D5^2 .. D13^2

struct RowResult {
    TableRow row;
    int degree = 0;
    PartitionCombination expected, computed;
    bool pass = false;
};

struct TableReport {
    std::vector<RowResult> rows;
    bool pass = true;
};

TableReport verify_table(const std::vector<TableRow>& rows, Symm& symm, int through = -1);

struct MilnorReport {
    std::vector<std::pair<Partition, bool>> listed;  // the five numbers and their values
    size_t spin_monomials_checked = 0;
    std::vector<Partition> nonzero_spin_numbers;  // numbers with w1 or w2 that fail to vanish
    std::vector<Partition> nonzero_numbers;
    PartitionCombination expected, computed;
    bool numbers_ok = false, spin_ok = false, class_ok = false;
    bool pass() const { return numbers_ok && spin_ok && class_ok; }
};

const std::string& milnor24_manifold();
const std::string& milnor24_printed_manifold();
const std::string& t24_expression();
PartitionCombination milnor24_class();  // T24 + Y12^2 + ... + Y4^6
MilnorReport verify_milnor24(Symm& symm, const std::string& manifold = milnor24_manifold());

}  // namespace bordism
