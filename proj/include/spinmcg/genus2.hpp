#pragma once

// Genus 2: the coset graph of the odd spin subgroup over the six odd forms,
// Schreier generators, and matrix-level checks of the Birman-Hilden
// relations. Equalities here hold in Sp(4, Z), which says nothing about
// the Torelli kernel.

#include <string>
#include <vector>

#include "spinmcg/quadform.hpp"
#include "spinmcg/twist_words.hpp"

namespace spinmcg::genus2 {

struct Edge {
    std::size_t from;
    std::size_t to;
    int label;  // i for C_i
};

struct CosetGraph {
    // vertices in path order when the graph is a path
    std::vector<QuadraticForm> vertices;
    std::vector<Edge> edges;
    std::size_t base = 0;
    bool is_path() const;
    std::size_t index_of(const QuadraticForm& q) const;
};

QuadraticForm base_form();  // [1,1,0,0]
CosetGraph coset_graph();

std::vector<TwistWord> coset_representatives();
// Walks the graph from the base form reading w left to right.
TwistWord representative(const TwistWord& w);

struct TableEntry {
    TwistWord row;
    int column;
    TwistWord computed;     // s C_i rep(s C_i)^-1, freely reduced
    TwistWord published;    // the entry as printed in the reference table
    bool matrix_equal;
    bool computed_member;   // computed generator preserves q1
};

std::vector<TableEntry> schreier_table();

struct RelationCheck {
    std::string name;
    bool ok;
};

// Commutations, braids, the order-6 relation, the squared relation and its
// commutation family. Also records that the base word of the squared
// relation maps to -I.
std::vector<RelationCheck> verify_presentation_sp4();

}  // namespace spinmcg::genus2
