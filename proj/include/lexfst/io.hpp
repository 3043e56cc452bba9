#ifndef LEXFST_IO_HPP
#define LEXFST_IO_HPP

#include <iosfwd>
#include <string>

#include "lexfst/transducer.hpp"

namespace lexfst {

// Text format, UTF-8, tab separated:
//   header:      #lexfst v1 initial=<id> lambda=<out_str> p=<int>
//   transition:  src<TAB>dst<TAB>in_sym<TAB>out_str
//   final:       src<TAB><TAB><TAB>final_out      (one line per phi_i)
// out_str is a token sequence joined by '|', or <eps> when empty.
void write_text(const Transducer& t, std::ostream& out);
std::string write_text(const Transducer& t);
Transducer read_text(std::istream& in);
NondetTransducer read_text_nondet(std::istream& in);

// Binary format: 8-byte magic LEXFST01, varint-packed symbol tables,
// state-indexed transition arrays sorted by input symbol id, final-output
// table. Identical canonical machines produce identical bytes.
void write_binary(const Transducer& t, std::ostream& out);
std::string write_binary(const Transducer& t);
Transducer read_binary(std::istream& in);

// File-level helpers; binary files are recognized by their magic.
Transducer load_transducer(const std::string& path);
NondetTransducer load_nondet(const std::string& path);
// Writes binary when `path` ends in .fstb, text otherwise.
void save_transducer(const Transducer& t, const std::string& path);

struct StatsReport {
  uint32_t p = 1;
  size_t states = 0;
  size_t transitions = 0;
  size_t input_alphabet = 0;
  size_t output_alphabet = 0;
  size_t binary_size = 0;
};

StatsReport stats(const Transducer& t);
// Aligned text block plus one machine-readable key=value line.
void print_stats(const StatsReport& r, std::ostream& out);

}  // namespace lexfst

#endif  // LEXFST_IO_HPP
