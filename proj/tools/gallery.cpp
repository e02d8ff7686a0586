#include "gallery.hpp"

namespace kneser::tools {

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = {
      {"z5-torus-qp",
       "# Sumset with one partial fiber.\n"
       "group G = Z/5 x T\n"
       "set A = {0}xT | {1}x[0,1/2]\n"
       "set B = {0,1}xT | {2}x[0,1/4]\n"
       "classify A B\n",
       {"QP"},
       "II"},
      {"z11-periodic",
       "# Periodic pair in a finite group.\n"
       "group G = Z/11\n"
       "set A = {0,1}\n"
       "set B = {0,3}\n"
       "classify A B\n",
       {"P"},
       "I"},
      {"z17-extendible",
       "# Extendible pair; both sets grow to full cosets.\n"
       "group G = Z/17 x T\n"
       "set A = {1,3,5,7}x[0,0.8]\n"
       "set B = {0,2}x[0,0.9]\n"
       "classify A B\n",
       {"E"},
       "I"},
      {"z15-extendible-qp",
       "# Quasi-periodic construction with S = [0,1/3].\n"
       "group G = Z/15 x T\n"
       "set A = {1,3,5}xT | {7}x[0,1/3]\n"
       "set B = {0,2}xT | {4}x[0,2/3]\n"
       "classify A B\n",
       {"E", "QP"},
       "I"},
      {"torus-intervals",
       "# Preimages of intervals under the identity character.\n"
       "group G = T\n"
       "set A = {0}x[0,1/4]\n"
       "set B = {0}x[0,1/3]\n"
       "classify A B\n"
       "transform A B 4\n",
       {"K"},
       "I"},
      {"z7",
       "# Closure of C = ({0,1}+7Z) u (2+7C) in the 7-adic integers.\n"
       "rset C over p=7 = ({0,1}+7Z) | (2 + 7*C)\n"
       "profinite C C depth 5\n",
       {},
       ""},
      {"z4-null-point",
       "# A0' a single point, B0' an interval.\n"
       "group G = Z/4 x T\n"
       "set A = {0}xT | {1}x{0}\n"
       "set B = {0}xT | {1}x[0,1/2]\n"
       "classify A B\n",
       {"QP"},
       "IV"},
  };
  return entries;
}

}  // namespace kneser::tools
