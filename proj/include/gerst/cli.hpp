#ifndef GERST_CLI_HPP
#define GERST_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gerst/hopf.hpp"

namespace gerst {

/// Command dispatch for the gerst tool. Returns the process exit code:
/// 0 success / pass, 1 check verdict fail, 2 usage or resource errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Algebra spec grammar: Z/2 | Z/3 | Z/4 | S3 | sweedler | taft:<n>:<q> |
/// dual:<spec> | double:<spec> | path to a Hopf file.
HopfPtr resolve_algebra(const std::string& spec, const FieldSpec& field, bool validate_files);

}  // namespace gerst

#endif
