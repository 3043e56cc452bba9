#include "lexfst/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace lexfst {

namespace {

std::string render_tokens(const SymbolTable& syms, const OutputString& s) {
  if (s.empty()) return kEpsilonName;
  std::string r;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) r += '|';
    r += syms.name(s[i]);
  }
  return r;
}

OutputString parse_tokens(SymbolTable& syms, const std::string& field,
                          size_t lineno) {
  if (field == kEpsilonName) return {};
  if (field.empty()) throw ParseError(lineno, "empty output field");
  OutputString out;
  size_t start = 0;
  for (;;) {
    size_t bar = field.find('|', start);
    std::string tok = field.substr(start, bar - start);
    if (tok.empty()) throw ParseError(lineno, "empty output token");
    out.push_back(syms.intern(tok));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

}  // namespace

void write_text(const Transducer& t, std::ostream& out) {
  out << "#lexfst v1 initial=" << t.initial
      << " lambda=" << render_tokens(t.osyms, t.lambda) << " p=" << t.p_bound
      << "\n";
  for (StateId q = 0; q < t.states.size(); ++q) {
    // Emit arcs in input-name order so the text form does not depend on the
    // order symbols happened to be interned.
    std::vector<Arc> arcs = t.states[q].arcs;
    std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
      return t.isyms.name(a.in) < t.isyms.name(b.in);
    });
    for (const Arc& a : arcs)
      out << q << '\t' << a.to << '\t' << t.isyms.name(a.in) << '\t'
          << render_tokens(t.osyms, a.out) << "\n";
    for (const OutputString& phi : t.states[q].finals)
      out << q << "\t\t\t" << render_tokens(t.osyms, phi) << "\n";
  }
}

std::string write_text(const Transducer& t) {
  std::ostringstream os;
  write_text(t, os);
  return os.str();
}

namespace {

template <class M>
M read_text_impl(std::istream& in) {
  M t;
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream hs(line);
  std::string tag, version, f_init, f_lambda, f_p;
  hs >> tag >> version >> f_init >> f_lambda >> f_p;
  if (tag != "#lexfst") throw ParseError(1, "missing #lexfst header");
  if (version != "v1") throw ParseError(1, "unsupported version " + version);
  auto value = [&](const std::string& field, const char* key) {
    std::string prefix = std::string(key) + "=";
    if (field.rfind(prefix, 0) != 0)
      throw ParseError(1, "malformed header field '" + field + "'");
    return field.substr(prefix.size());
  };
  auto to_num = [](const std::string& s, size_t lineno) -> unsigned long {
    try {
      size_t used = 0;
      unsigned long v = std::stoul(s, &used);
      if (used != s.size()) throw ParseError(lineno, "bad number '" + s + "'");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad number '" + s + "'");
    }
  };
  StateId initial = static_cast<StateId>(to_num(value(f_init, "initial"), 1));
  t.lambda = parse_tokens(t.osyms, value(f_lambda, "lambda"), 1);
  t.p_bound = static_cast<uint32_t>(to_num(value(f_p, "p"), 1));

  auto ensure_state = [&](StateId q) {
    while (t.states.size() <= q) t.add_state();
  };
  ensure_state(initial);
  t.initial = initial;

  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    size_t start = 0;
    for (;;) {
      size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4) throw ParseError(lineno, "expected 4 tab-separated fields");
    StateId src = static_cast<StateId>(to_num(fields[0], lineno));
    ensure_state(src);
    if (fields[1].empty() && fields[2].empty()) {
      t.states[src].finals.push_back(parse_tokens(t.osyms, fields[3], lineno));
      continue;
    }
    if (fields[1].empty() || fields[2].empty())
      throw ParseError(lineno, "half-empty transition line");
    StateId dst = static_cast<StateId>(to_num(fields[1], lineno));
    ensure_state(dst);
    Symbol a = t.isyms.intern(fields[2]);
    t.add_transition(src, a, parse_tokens(t.osyms, fields[3], lineno), dst);
  }
  return t;
}

}  // namespace

Transducer read_text(std::istream& in) {
  Transducer t = read_text_impl<Transducer>(in);
  for (const auto& st : t.states)
    for (const Arc& a : st.arcs)
      if (a.in == kEpsilon) throw InputEpsilon();
  return t;
}

NondetTransducer read_text_nondet(std::istream& in) {
  return read_text_impl<NondetTransducer>(in);
}

// ---- binary -----------------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'L', 'E', 'X', 'F', 'S', 'T', '0', '1'};

void put_varint(std::string& out, uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

struct Reader {
  const std::string& buf;
  size_t pos = 0;

  uint64_t varint() {
    uint64_t v = 0;
    int shift = 0;
    for (;;) {
      if (pos >= buf.size()) throw TruncatedFile();
      uint8_t b = static_cast<uint8_t>(buf[pos++]);
      v |= static_cast<uint64_t>(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
      shift += 7;
      if (shift > 63) throw TruncatedFile();
    }
  }

  std::string str() {
    size_t n = varint();
    if (pos + n > buf.size()) throw TruncatedFile();
    std::string s = buf.substr(pos, n);
    pos += n;
    return s;
  }
};

void put_outstring(std::string& out, const OutputString& s) {
  put_varint(out, s.size());
  for (Symbol x : s) put_varint(out, x);
}

OutputString get_outstring(Reader& r) {
  size_t n = r.varint();
  OutputString s;
  s.reserve(n);
  for (size_t i = 0; i < n; ++i) s.push_back(static_cast<Symbol>(r.varint()));
  return s;
}

void put_table(std::string& out, const SymbolTable& syms) {
  put_varint(out, syms.size());
  for (Symbol i = 0; i < syms.size(); ++i) {
    const std::string& n = syms.name(i);
    put_varint(out, n.size());
    out += n;
  }
}

SymbolTable get_table(Reader& r) {
  size_t n = r.varint();
  if (n == 0) throw TruncatedFile();
  SymbolTable syms;
  for (size_t i = 0; i < n; ++i) {
    std::string name = r.str();
    if (i == 0) {
      if (name != kEpsilonName) throw TruncatedFile();
      continue;
    }
    syms.intern(name);
  }
  return syms;
}

}  // namespace

std::string write_binary(const Transducer& t) {
  std::string out(kMagic, sizeof(kMagic));
  put_varint(out, t.p_bound);
  put_varint(out, t.initial);
  put_outstring(out, t.lambda);
  put_table(out, t.isyms);
  put_table(out, t.osyms);
  put_varint(out, t.states.size());
  for (const auto& st : t.states) {
    put_varint(out, st.arcs.size());
    for (const Arc& a : st.arcs) {
      put_varint(out, a.in);
      put_varint(out, a.to);
      put_outstring(out, a.out);
    }
    put_varint(out, st.finals.size());
    for (const OutputString& phi : st.finals) put_outstring(out, phi);
  }
  return out;
}

void write_binary(const Transducer& t, std::ostream& out) {
  std::string bytes = write_binary(t);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Transducer read_binary(std::istream& in) {
  std::string buf((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  if (buf.size() < sizeof(kMagic)) throw BadMagic();
  if (buf.compare(0, 6, "LEXFST") != 0) throw BadMagic();
  if (buf.compare(0, sizeof(kMagic), kMagic, sizeof(kMagic)) != 0)
    throw VersionMismatch(buf.substr(6, 2));
  Reader r{buf, sizeof(kMagic)};
  Transducer t;
  t.p_bound = static_cast<uint32_t>(r.varint());
  StateId initial = static_cast<StateId>(r.varint());
  t.lambda = get_outstring(r);
  t.isyms = get_table(r);
  t.osyms = get_table(r);
  size_t nstates = r.varint();
  t.states.clear();
  t.states.resize(nstates);
  if (initial >= nstates) throw TruncatedFile();
  t.initial = initial;
  for (auto& st : t.states) {
    size_t narcs = r.varint();
    for (size_t i = 0; i < narcs; ++i) {
      Symbol a = static_cast<Symbol>(r.varint());
      StateId to = static_cast<StateId>(r.varint());
      if (to >= nstates || a >= t.isyms.size()) throw TruncatedFile();
      st.arcs.push_back(Arc{a, get_outstring(r), to});
    }
    size_t nfinals = r.varint();
    for (size_t i = 0; i < nfinals; ++i) st.finals.push_back(get_outstring(r));
  }
  return t;
}

// ---- files ------------------------------------------------------------------

namespace {

bool sniff_binary(std::istream& in) {
  char head[6] = {};
  in.read(head, 6);
  bool bin = in.gcount() == 6 && std::string(head, 6) == "LEXFST";
  in.seekg(0);
  return bin;
}

}  // namespace

Transducer load_transducer(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return sniff_binary(in) ? read_binary(in) : read_text(in);
}

NondetTransducer load_nondet(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  if (sniff_binary(in)) return NondetTransducer::from(read_binary(in));
  return read_text_nondet(in);
}

void save_transducer(const Transducer& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  if (path.size() > 5 && path.compare(path.size() - 5, 5, ".fstb") == 0)
    write_binary(t, out);
  else
    write_text(t, out);
}

// ---- stats ------------------------------------------------------------------

StatsReport stats(const Transducer& t) {
  StatsReport r;
  r.p = t.p_bound;
  r.states = t.states.size();
  r.transitions = t.num_arcs();
  r.input_alphabet = t.isyms.size() - 1;   // excluding <eps>
  r.output_alphabet = t.osyms.size() - 1;
  r.binary_size = write_binary(t).size();
  if (r.states == 1 && r.transitions == 0 && t.states[0].finals.empty()) {
    r.states = 0;  // the empty machine
    r.input_alphabet = 0;
    r.output_alphabet = 0;
  }
  return r;
}

void print_stats(const StatsReport& r, std::ostream& out) {
  out << std::left;
  out << std::setw(16) << "p" << r.p << "\n";
  out << std::setw(16) << "States" << r.states << "\n";
  out << std::setw(16) << "Transitions" << r.transitions << "\n";
  out << std::setw(16) << "Alphabet (in)" << r.input_alphabet << "\n";
  out << std::setw(16) << "Alphabet (out)" << r.output_alphabet << "\n";
  out << std::setw(16) << "Binary size" << r.binary_size << "\n";
  out << "p=" << r.p << " states=" << r.states
      << " transitions=" << r.transitions << " in_alphabet=" << r.input_alphabet
      << " out_alphabet=" << r.output_alphabet
      << " binary_size=" << r.binary_size << "\n";
}

}  // namespace lexfst
