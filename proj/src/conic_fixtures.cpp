#include "conoff/conic_fixtures.hpp"

namespace conoff {

namespace {

const char* const kGeneralParabola =
    "-2*p*r^2*y*x^2+8*p*r^2*y^3+8*p^2*r^2*y^2-32*y*p^3*r^2+16*p^4*r^2-16*y^4*p^2+32*y^3*p^3-16*p^4*y^2+3*"
    "r^2*x^4+8*p^2*r^4+20*p^2*r^2*x^2-y^2*x^4+10*y*p*x^4-x^6-x^4*p^2+8*p*y^3*x^2-32*x^2*y^2*p^2+8*x^2*y*p"
    "^3-3*r^4*x^2+2*r^2*x^2*y^2+r^6-r^4*y^2-8*p*r^4*y";

const char* const kGeneralEllipse =
    "6*b^4*x^4*a^4-4*y^6*b^4*a^2-6*a^6*x^4*b^2-4*b^6*x^2*a^4+6*b^4*x^2*a^6+a^4*b^8-2*y^2*b^8*a^2+6*y^2*b^"
    "6*x^2*a^2+6*a^6*y^2*x^2*b^2-10*b^4*x^2*a^4*y^2+y^8*b^4+b^8*r^4+b^4*r^8-2*b^6*r^6-2*b^4*y^2*x^4*r^2-6"
    "*x^2*y^4*b^4*r^2+6*x^2*b^4*r^4*y^2-4*b^4*y^6*r^2+2*b^4*y^6*x^2+y^4*b^4*x^4+b^4*x^4*r^4-2*b^4*r^6*x^2"
    "-2*b^6*x^2*r^4+6*y^4*b^4*r^4-2*b^8*y^2*r^2+6*b^6*r^4*y^2-4*b^4*r^6*y^2+6*a^4*y^2*b^6+6*a^6*y^2*b^2*r"
    "^2+2*a^4*b^2*x^4*y^2-4*a^4*x^6*b^2+4*a^6*x^2*b^2*r^2-8*b^4*x^2*a^4*r^2+10*a^4*x^4*b^2*r^2-6*b^4*r^2*"
    "a^2*x^2*y^2-6*a^4*x^2*b^2*r^2*y^2-8*a^4*x^2*b^2*r^4-6*b^4*r^2*a^2*x^4+4*b^4*r^4*a^2*x^2-6*y^4*a^4*b^"
    "2*x^2-6*b^4*x^4*a^2*y^2+6*b^6*x^2*r^2*a^2+2*b^4*x^2*y^4*a^2+10*b^4*y^4*a^2*r^2+4*b^6*y^2*r^2*a^2-8*b"
    "^4*y^2*r^4*a^2-8*b^4*y^2*a^4*r^2+2*r^6*a^2*b^4+a^8*b^4-6*a^4*y^4*r^2*b^2+4*a^4*y^2*r^4*b^2-2*a^8*b^2"
    "*x^2+x^4*a^4*y^4+4*x^2*b^6*y^2*r^2-6*y^4*b^6*a^2-4*a^6*y^2*b^4-2*y^4*a^4*x^2*r^2+2*b^2*r^2*a^2*x^4*y"
    "^2-2*r^8*a^2*b^2+r^8*a^4+a^8*x^4+a^4*x^8-4*a^4*x^6*r^2+6*a^4*x^4*r^4+2*b^2*r^2*a^2*x^6-6*b^2*r^4*a^2"
    "*x^4-2*a^6*r^6+2*a^6*x^6+a^8*r^4+2*y^6*b^2*a^2*x^2-2*r^6*a^4*y^2+6*r^6*b^2*y^2*a^2-2*a^8*x^2*r^2+y^4"
    "*a^4*r^4-6*y^4*b^2*r^4*a^2-2*a^6*y^2*r^4+4*x^2*a^6*y^2*r^2+6*x^2*a^4*y^2*r^4+2*y^4*b^2*x^2*a^2*r^2-1"
    "0*x^2*b^2*y^2*r^4*a^2+2*y^6*b^2*a^2*r^2+6*r^6*b^2*x^2*a^2+4*b^2*x^4*y^4*a^2+2*a^4*x^6*y^2-6*a^6*x^4*"
    "r^2-4*r^6*a^4*x^2+2*b^2*x^6*a^2*y^2+6*r^4*a^6*x^2-6*a^4*x^4*r^2*y^2+2*b^6*y^6-2*a^8*b^2*r^2-2*x^2*y^"
    "4*b^6+6*a^4*y^4*b^4+y^4*b^8-6*y^4*b^6*r^2-2*x^4*a^6*y^2-2*a^6*b^6+2*b^6*r^4*a^2-2*b^8*r^2*a^2+2*b^4*"
    "a^6*r^2-6*b^4*a^4*r^4+2*r^2*a^4*b^6+2*r^4*a^6*b^2+2*r^6*a^4*b^2";

const char* const kGeneralHyperbola =
    "6 a^4 x^4 r^4 - 2 b^2 x^4 a^2 r^2 y^2 + 4 b^6 x^2 a^4 + 2 a^8 b^2 x^2 + 2 a^6 x^6 + 6 y^4 a^2 b^6 - "
    "2 a^4 b^2 x^4 y^2  + 4 a^4 x^6 b^2 - 6 a^6 x^2 b^2 y^2 - 4 a^6 x^2 b^2 r^2 - 10 a^4 x^2 b^4 y^2 - 8 "
    "a^4 x^2 b^4 r^2  + 8 a^4 x^2 b^2 r^4 - 6 b^4 r^2 a^2 x^4 + 4 b^4 r^4 a^2 x^2 - 10 a^4 x^4 b^2 r^2 - "
    "6 b^4 r^2 a^2 x^2 y^2  + 6 a^4 x^2 b^2 r^2 y^2 - 6 b^4 x^4 a^2 y^2 + 2 b^4 x^2 y^4 a^2 - 6 b^6 x^2 r"
    "^2 a^2 + 10 b^4 y^4 a^2 r^2  - 8 b^4 y^2 a^4 r^2 - 4 b^6 y^2 r^2 a^2 - 8 b^4 y^2 r^4 a^2 + 6 y^4 a^4"
    " b^2 x^2 - 2 a^2 y^2 b^8 + 6 b^4 y^4 a^4  - 4 b^4 y^6 a^2 - 6 y^2 a^4 b^6 + 6 a^4 x^4 b^4 - 4 y^2 a^"
    "6 b^4 - 6 y^2 a^6 r^2 b^2 + 6 y^4 a^4 r^2 b^2  - 4 y^2 a^4 r^4 b^2 + 2 a^6 b^6 + a^4 b^8 + 6 a^6 b^4"
    " x^2 + 6 a^6 x^4 b^2 + b^8 r^4 + a^8 b^4 - 2 a^2 b^8 r^2  - 2 a^2 b^6 r^4 + 2 b^6 x^2 r^4 - 4 b^6 x^"
    "2 y^2 r^2 + 6 b^2 x^4 a^2 r^4 + 4 a^6 x^2 r^2 y^2 - 2 b^2 x^2 a^2 y^6  + 2 b^4 x^2 y^6 - 2 b^2 x^2 y"
    "^4 a^2 r^2 + 6 b^4 x^2 y^2 r^4 + 10 b^2 x^2 y^2 a^2 r^4 + 2 b^6 x^2 y^4  - 6 b^4 x^2 y^4 r^2 + a^4 x"
    "^8 + 2 b^6 r^6 + b^4 r^8 + 6 a^6 x^2 r^4 - 6 a^6 x^4 r^2 - 2 a^8 x^2 r^2  - 6 a^4 b^4 r^4 - 2 a^4 b^"
    "6 r^2 - 2 a^6 y^2 r^4 - 2 a^6 b^2 r^4 - 6 a^2 r^6 b^2 y^2 - 2 a^4 r^6 y^2  - 6 a^4 x^4 r^2 y^2 + 6 a"
    "^2 y^4 b^2 r^4 + 2 a^8 b^2 r^2 + a^4 y^4 r^4 - 2 a^2 y^6 b^2 r^2 - 4 a^4 r^6 x^2  + a^8 x^4 + 6 a^4 "
    "x^2 y^2 r^4 - 4 a^4 x^6 r^2 + a^8 r^4 + 2 a^4 x^6 y^2 - 2 a^6 x^4 y^2 - 2 a^6 r^6  - 2 a^4 r^6 b^2 +"
    " 2 a^6 r^2 b^4 + a^4 y^4 x^4 + 2 a^2 r^8 b^2 - 2 a^4 y^4 x^2 r^2 + 2 a^2 b^4 r^6 + a^4 r^8  + 6 y^4 "
    "b^4 r^4 + 6 y^4 b^6 r^2 - 4 y^6 b^4 r^2 - 4 y^2 b^4 r^6 - 6 y^2 b^6 r^4 + y^4 b^8 + y^8 b^4 - 2 y^6 "
    "b^6  - 2 b^2 x^6 a^2 y^2 - 2 b^4 x^2 r^6 - 6 b^2 x^2 r^6 a^2 + b^4 x^4 y^4 - 4 b^2 x^4 y^4 a^2 + b^4"
    " x^4 r^4  - 2 b^2 x^6 a^2 r^2 - 2 b^4 x^4 r^2 y^2 - 2 y^2 b^8 r^2 - 6 y^2 x^2 a^2 b^6";

const char* const kParabolaBasis[] = {
    "p*(-2*p*r^2*y*x^2+8*p*r^2*y^3+8*p^2*r^2*y^2-32*y*p^3*r^2+16*p^4*r^2-16*y^4*p^2+32*y^3*p^3-16*p^4*y^2"
    "+3*r^2*x^4+8*p^2*r^4+20*p^2*r^2*x^2-y^2*x^4+10*y*p*x^4-x^6-x^4*p^2+8*p*y^3*x^2-32*x^2*y^2*p^2+8*x^2*"
    "y*p^3-3*r^4*x^2+2*r^2*x^2*y^2+r^6-r^4*y^2-8*p*r^4*y)",
    "p*(-114*x^3*p^2*y+232*x*p^3*y^2+40*x*p^4*y-316*x*p^3*r^2-8*x*y^3*p^2-2*x^3*p^3+16*x*p^5-16*p*y^2*x*r"
    "^2-12*p*y^2*x0*r^2+54*x*y*p^2*r^2-120*y*p^2*x0*r^2-32*y*p^4*x0+104*p^3*x0*r^2-14*p*y^2*x^3+32*p^2*y^"
    "3*x0+32*x*p*r^4-46*x^3*p*r^2-16*p^5*x0+14*x^5*p+27*r^4*x0*p+2*y*x^5+2*y^3*x^3-2*y^3*x*r^2-4*y^3*x0*r"
    "^2+2*y*x*r^4-4*y*x^3*r^2-24*p*y^4*x+16*p*y^4*x0)",
    "p*(4*x^2*p^3+56*p^3*r^2-4*x*p^3*x0-56*p^3*y^2+48*y^3*p^2+42*x^2*p^2*y-12*x*p^2*y*x0-48*y*p^2*r^2-4*x"
    "^4*p+8*y^4*p+14*p*r^4-10*x^2*p*r^2-12*x*p*y^2*x0-8*x^2*p*y^2+27*x*p*x0*r^2-22*y^2*p*r^2+2*r^4*y+2*y^"
    "3*x^2+2*y*x^4-4*r^2*y*x^2-4*x*y^3*x0-2*r^2*y^3)",
    "p*(112*x*p^4-112*x0*p^4-120*y*x*p^3+176*y*x0*p^3-124*x*p^2*r^2-80*y^2*x0*p^2-16*x0*p^2*r^2+160*x*p^2"
    "*y^2-96*x^2*p^2*x0+82*x^3*p^2-28*x^3*y*p+4*y*x0*p*r^2-24*p*x*y^3+16*p*y^3*x0+22*x*y*p*r^2-4*r^2*y^2*"
    "x0+2*y^2*x^3-4*r^2*x^3-2*r^2*x*y^2+2*r^4*x+3*r^4*x0-3*x^2*x0*r^2+2*x^5)",
    "8*x*p*y^2-6*x^3*p+7*x0*p*x^2+6*x*p*r^2+4*p*x0*y^2+y*x0*x^2-y*x0*r^2+8*y*x*p^2-12*y*x0*p^2+2*x0*p*r^2"
    "-8*x*p^3+8*x0*p^3",
    "p*(8*p^2*r^2-8*y^2*p^2-4*x0*x*p^2+4*x^2*p^2+4*x*y*x0*p+8*p*y^3+2*y*p*x^2-8*y*p*r^2+3*x0*x*r^2-2*r^2*"
    "y^2+2*x^4+2*r^4+2*x^2*y^2-4*x^2*r^2-3*x0*x^3-4*x*y^2*x0)",
    "x0*x^4-2*x^2*x0*r^2+44*x^2*p^2*x0+32*y^2*x0*p^2-12*y*x0*p*r^2-80*y*x0*p^3+r^4*x0+16*x0*p^2*r^2+48*x0"
    "*p^4-2*x^3*y*p-38*x^3*p^2-40*x*p^2*y^2+2*x*y*p*r^2+56*y*x*p^3+20*x*p^2*r^2-48*x*p^4",
    "3*x0^2*r^2-12*x0^2*p^2+16*x*y*x0*p+32*x0*x*p^2-20*x^2*p^2-48*y^2*p^2+48*p^2*r^2-2*x0*x^3+2*x0*x*r^2+"
    "4*y*p*x^2",
    "-4*p*y^2-4*p*x^2+6*p*x*x0-2*p*x0^2+4*p*r^2+x0^2*y",
    "-2*x0*x^2+3*x0^2*x+2*x0*r^2+4*y*x*p-8*p*x0*y-8*x*p^2+8*x0*p^2",
    "x0^3-8*x*p^2+8*x0*p^2-4*p*x0*y",
    "4*p*y0-x0^2",
    "-2*x*p+2*x0*p-x0*y+x0*y0",
    "y^2-2*y*y0+y0^2+x^2-2*x*x0+x0^2-r^2",
};

const char* const kEllipseBasis[] = {
    "a^2*b^2*(6*b^4*x^4*a^4-4*y^6*b^4*a^2-6*a^6*x^4*b^2-4*b^6*x^2*a^4+6*b^4*x^2*a^6+a^4*b^8-2*y^2*b^8*a^2"
    "+6*y^2*b^6*x^2*a^2+6*a^6*y^2*x^2*b^2-10*b^4*x^2*a^4*y^2+y^8*b^4+b^8*r^4+b^4*r^8-2*b^6*r^6-2*b^4*y^2*"
    "x^4*r^2-6*x^2*y^4*b^4*r^2+6*x^2*b^4*r^4*y^2-4*b^4*y^6*r^2+2*b^4*y^6*x^2+y^4*b^4*x^4+b^4*x^4*r^4-2*b^"
    "4*r^6*x^2-2*b^6*x^2*r^4+6*y^4*b^4*r^4-2*b^8*y^2*r^2+6*b^6*r^4*y^2-4*b^4*r^6*y^2+6*a^4*y^2*b^6+6*a^6*"
    "y^2*b^2*r^2+2*a^4*b^2*x^4*y^2-4*a^4*x^6*b^2+4*a^6*x^2*b^2*r^2-8*b^4*x^2*a^4*r^2+10*a^4*x^4*b^2*r^2-6"
    "*b^4*r^2*a^2*x^2*y^2-6*a^4*x^2*b^2*r^2*y^2-8*a^4*x^2*b^2*r^4-6*b^4*r^2*a^2*x^4+4*b^4*r^4*a^2*x^2-6*y"
    "^4*a^4*b^2*x^2-6*b^4*x^4*a^2*y^2+6*b^6*x^2*r^2*a^2+2*b^4*x^2*y^4*a^2+10*b^4*y^4*a^2*r^2+4*b^6*y^2*r^"
    "2*a^2-8*b^4*y^2*r^4*a^2-8*b^4*y^2*a^4*r^2+2*r^6*a^2*b^4+a^8*b^4-6*a^4*y^4*r^2*b^2+4*a^4*y^2*r^4*b^2-"
    "2*a^8*b^2*x^2+x^4*a^4*y^4+4*x^2*b^6*y^2*r^2-6*y^4*b^6*a^2-4*a^6*y^2*b^4-2*y^4*a^4*x^2*r^2+2*b^2*r^2*"
    "a^2*x^4*y^2-2*r^8*a^2*b^2+r^8*a^4+a^8*x^4+a^4*x^8-4*a^4*x^6*r^2+6*a^4*x^4*r^4+2*b^2*r^2*a^2*x^6-6*b^"
    "2*r^4*a^2*x^4-2*a^6*r^6+2*a^6*x^6+a^8*r^4+2*y^6*b^2*a^2*x^2-2*r^6*a^4*y^2+6*r^6*b^2*y^2*a^2-2*a^8*x^"
    "2*r^2+y^4*a^4*r^4-6*y^4*b^2*r^4*a^2-2*a^6*y^2*r^4+4*x^2*a^6*y^2*r^2+6*x^2*a^4*y^2*r^4+2*y^4*b^2*x^2*"
    "a^2*r^2-10*x^2*b^2*y^2*r^4*a^2+2*y^6*b^2*a^2*r^2+6*r^6*b^2*x^2*a^2+4*b^2*x^4*y^4*a^2+2*a^4*x^6*y^2-6"
    "*a^6*x^4*r^2-4*r^6*a^4*x^2+2*b^2*x^6*a^2*y^2+6*r^4*a^6*x^2-6*a^4*x^4*r^2*y^2+2*b^6*y^6-2*a^8*b^2*r^2"
    "-2*x^2*y^4*b^6+6*a^4*y^4*b^4+y^4*b^8-6*y^4*b^6*r^2-2*x^4*a^6*y^2-2*a^6*b^6+2*b^6*r^4*a^2-2*b^8*r^2*a"
    "^2+2*b^4*a^6*r^2-6*b^4*a^4*r^4+2*r^2*a^4*b^6+2*r^4*a^6*b^2+2*r^6*a^4*b^2)",
    "b^2*(-2*y*a^2*b^2+b^2*y0*y^2+y0*a^2*b^2-b^2*y0*r^2+3*a^2*y*x*x0-a^2*y0*x^2+a^2*y^2*y0-a^4*y0+a^2*y0*"
    "r^2+a^4*y-a^2*y^3-a^2*y*x^2+a^2*y*r^2)",
    "a^2*(-x0*b^2*y^2+x0*a^2*x^2+x0*a^2*b^2-x0*a^2*r^2+3*y*b^2*y0*x-2*x*a^2*b^2+b^2*x^2*x0-b^4*x0+x0*b^2*"
    "r^2+b^4*x-b^2*x*y^2-b^2*x^3+x*b^2*r^2)",
    "b^2*(3*x0*a^2*x^3+6*a^4*x*x0-3*b^2*x*a^2*x0-3*x*x0*a^2*r^2+4*a^2*y*y0*x^2+2*a^2*y^3*y0-2*a^4*y*y0-b^"
    "2*y0*y^3+5*y*y0*a^2*b^2-4*a^2*y*y0*r^2+y*b^2*y0*r^2-3*x^4*a^2-5*x^2*y^2*a^2-2*y^4*a^2-3*a^4*x^2+2*a^"
    "4*y^2+3*b^2*x^2*a^2-y^2*a^2*b^2-3*a^4*b^2+6*x^2*a^2*r^2+5*y^2*a^2*r^2+3*a^4*r^2+3*b^2*a^2*r^2-3*r^4*"
    "a^2)",
    "b^2*(-b^4*x*y0*r^2+a^2*b^4*y0*x+3*x0*b^4*y*a^2-5*b^4*x*y*a^2+b^4*y^2*y0*x+2*b^2*x^3*a^2*y-7*b^2*x*a^"
    "2*y^2*y0-3*x0*b^2*y*a^2*r^2-a^2*b^2*y0*x^3-3*x0*a^4*y*b^2-2*b^2*x*a^2*y*r^2+2*b^2*x*a^2*y^3+5*x*a^4*"
    "y*b^2+3*x0*b^2*y^3*a^2+a^4*x*y^2*y0-x^3*y*a^4+a^4*x*y0*r^2+3*a^4*x0*y*r^2-a^6*x*y0-a^4*x*y^3-a^4*y0*"
    "x^3+y*a^4*x*r^2+a^6*x*y)",
    "b^2*(-2*a^4*y^4-6*b^2*r^2*a^2*x*x0+b^4*y^2*a^2+4*a^4*y*y0*b^2+4*y0*b^4*y*a^2-b^2*x^2*a^2*y^2+3*b^2*x"
    "^2*a^2*r^2+4*b^2*y^2*a^2*r^2-4*a^2*y*b^2*y0*x^2-4*a^2*y*b^2*y0*r^2-2*b^4*y0*y^3+3*b^4*r^2*a^2-3*b^2*"
    "r^4*a^2-3*a^4*b^4+2*y*b^4*y0*r^2-b^2*y^4*a^2+6*a^4*b^2*x^2+6*a^4*b^2*r^2-3*a^6*b^2+4*a^4*y*y0*x^2-4*"
    "a^4*y*y0*r^2+3*a^6*r^2-3*a^4*r^4+2*a^4*y^3*y0-2*a^6*y*y0+6*a^4*x^2*r^2+5*a^4*y^2*r^2+6*a^6*x*x0-3*x^"
    "4*a^4-3*x^2*a^6-5*a^4*x^2*y^2+2*a^6*y^2)",
    "b^2*(-21*a^4*x*b^4-6*x^3*b^4*a^2+2*a^6*y^2*x-3*x^5*a^4+6*b^6*x*a^2+9*a^6*b^2*x+6*a^4*y^2*b^2*x-5*b^4"
    "*y^2*x*a^2-5*y^2*a^4*x^3-2*y^4*a^4*x+12*a^4*b^2*x^3-3*a^6*x^3-6*a^6*b^2*x0-6*b^6*x0*a^2+4*y*a^4*y0*x"
    "^3+2*y^3*a^4*x*y0-2*y*a^6*x*y0-14*y*a^4*b^2*y0*x-4*y*a^4*x*y0*r^2+5*y^2*a^4*x*r^2-4*y0*b^2*x^3*a^2*y"
    "+22*y0*b^4*x*y*a^2+6*a^4*x^3*r^2+3*a^6*x*r^2-2*b^4*x*y0*y^3-3*a^4*x*r^4-b^2*x^3*a^2*y^2-b^2*y^4*x*a^"
    "2-6*b^4*y^2*a^2*x0-12*b^2*a^4*x0*r^2+6*b^4*x^2*a^2*x0+6*x0*b^4*r^2*a^2+6*x0*a^6*r^2+6*x0*a^4*b^2*y^2"
    "+2*b^4*x*y*y0*r^2+12*x0*a^4*b^4+3*b^2*x^3*a^2*r^2-4*y*a^2*b^2*x*y0*r^2-3*b^2*x*r^4*a^2-6*b^2*x^2*r^2"
    "*a^2*x0+4*b^2*y^2*x*a^2*r^2+9*b^4*r^2*a^2*x)",
    "b^2*(4*a^4*y^3-2*a^4*x^2*y-4*a^2*y^3*x^2-2*y^5*a^2-2*a^6*y-2*a^2*b^2*y0*x^2+4*a^2*b^2*y0*y^2+4*a^2*b"
    "^2*y0*r^2+2*a^4*y*b^2-2*b^2*y^3*a^2-2*b^4*y*a^2-b^4*y0*r^2+b^4*y0*a^2+b^4*y0*y^2-3*a^4*y0*b^2+2*a^4*"
    "y*r^2+2*b^2*y*a^2*r^2+4*b^2*y*a^2*x^2+2*a^6*y0+4*x^2*a^2*y*r^2+3*x^2*a^2*y^2*y0-2*x^2*a^2*y0*r^2-3*a"
    "^2*y^2*y0*r^2-b^2*y^2*y0*x^2+2*b^2*y^2*y0*r^2+b^2*x^2*y0*r^2+4*y^3*a^2*r^2-2*y*r^4*a^2+r^4*a^2*y0-3*"
    "a^4*y0*r^2-b^2*y^4*y0-b^2*r^4*y0+2*a^2*y^4*y0+a^2*y0*x^4+3*x^2*a^4*y0-4*a^4*y^2*y0-2*x^4*y*a^2)",
    "b^2*(-4*b^2*x^2*a^2*y^2*y0-2*x^2*a^2*b^2*y0*r^2-2*b^4*y^4*y0+b^4*y^3*a^2-b^2*y^5*a^2-3*y*a^4*b^4+4*b"
    "^4*y^2*y0*a^2+4*b^4*y^2*y0*r^2-b^2*x^2*a^2*y^3+6*x^2*a^4*y*b^2-2*a^2*y^2*b^2*y0*r^2+2*a^4*y^2*y0*b^2"
    "+2*b^2*y^3*a^2*r^2-y*b^4*r^2*a^2-y*b^2*r^4*a^2+8*y*a^4*b^2*r^2+b^2*x^2*a^2*y*r^2+2*r^4*a^2*b^2*y0+2*"
    "a^2*b^4*y0*r^2-2*a^6*y0*b^2+a^6*y*b^2-2*r^4*b^4*y0-3*a^4*x^4*y+4*a^6*y^3-2*a^4*y^5-5*x^2*a^4*y^3-2*a"
    "^6*r^2*y0+a^6*r^2*y+5*a^4*r^2*y^3-3*a^4*r^4*y+2*a^4*y^4*y0-4*a^6*y^2*y0+2*a^6*x^2*y0+2*a^8*y0+6*a^4*"
    "x^2*y*r^2+4*a^4*x^2*y^2*y0-4*a^4*r^2*y0*y^2-a^6*x^2*y-2*a^8*y)",
    "b^2*(2*a^6*b^4-2*a^4*b^6-16*a^4*y^4*b^2+2*a^4*x^6-4*b^4*r^4*a^2+2*b^6*r^2*a^2-4*b^6*y0*y^3+3*a^4*x^4"
    "*y^2-2*a^8*y^2+4*a^6*y^4-4*a^6*r^2*b^2+4*a^4*b^2*x^2*y^2+9*a^6*y^2*b^2+2*b^4*a^4*r^2+6*b^4*x^2*a^4-6"
    "*y^2*a^4*x^2*r^2+2*r^6*b^2*a^2-4*x^2*a^6*r^2+6*x^2*a^4*r^4+6*b^2*x^4*y^2*a^2-6*a^4*x^4*r^2+3*y^2*a^2"
    "*r^4*b^2+13*y^4*b^2*a^2*x^2-12*y^4*b^2*a^2*r^2-2*r^6*a^4+2*r^4*a^6+a^4*y^4*r^2+3*a^4*y^2*r^4+5*a^6*y"
    "^2*r^2+2*a^6*x^4+2*b^2*r^2*a^2*x^4-4*x^2*b^2*r^4*a^2-9*y^2*b^2*r^2*a^2*x^2+7*y^6*a^2*b^2-6*x^4*a^4*b"
    "^2-4*b^4*x^2*r^2*a^2+2*y^5*a^4*y0-4*y^3*a^6*y0+2*y*a^8*y0+6*b^4*y^5*y0+6*b^2*r^2*a^2*x^2*y*y0-4*b^2*"
    "x^2*a^2*y^3*y0+14*b^2*y^3*a^2*y0*r^2-6*b^2*a^2*y*r^4*y0-4*b^4*x^2*y*y0*r^2+4*b^4*x^2*y^3*y0-8*b^2*y^"
    "5*a^2*y0+6*a^6*x^2*y*y0-6*a^6*y*r^2*y0-12*b^4*y^3*y0*r^2+6*b^4*y*r^4*y0+2*a^4*b^2*r^4-2*y^6*a^4+18*a"
    "^4*y^3*b^2*y0-10*a^6*y*y0*b^2+8*a^4*y0*b^4*y+b^4*y^2*a^2*r^2+4*b^6*y*y0*r^2-8*a^4*y*b^2*y0*x^2+28*a^"
    "4*y*b^2*y0*r^2-26*a^2*y*b^4*y0*r^2+4*a^4*b^2*x^2*r^2-18*a^4*b^2*y^2*r^2-12*a^2*b^4*y0*y^3-x^2*y^4*a^"
    "4-4*x^2*a^6*b^2+3*y^4*b^4*a^2-7*a^4*b^4*y^2+6*y^2*b^6*a^2-12*b^4*x^2*y^2*a^2-5*a^6*y^2*x^2)",
    "b^2*(-12*b^4*x^4*a^4+18*y^6*b^4*a^2+14*b^6*x^2*a^4-6*b^4*x^2*a^6-5*a^4*b^8+15*y^2*b^8*a^2-27*y^2*b^6"
    "*x^2*a^2+6*a^6*y^4*b^2-8*a^6*y^2*x^2*b^2-6*b^4*x^2*a^4*y^2-11*a^4*y^2*b^6+22*a^6*y^2*b^2*r^2+15*a^4*"
    "b^2*x^4*y^2+24*b^6*y^5*y0+2*a^4*x^6*b^2+16*a^6*x^2*b^2*y*y0-24*b^4*x^2*a^4*y*y0-8*a^6*x^2*b^2*r^2+6*"
    "b^4*x^2*a^4*r^2-9*a^4*x^4*b^2*r^2-33*b^4*r^2*a^2*x^2*y^2+18*b^4*r^2*a^2*x^2*y*y0-29*a^4*x^2*b^2*r^2*"
    "y^2-4*a^4*x^2*b^2*r^2*y*y0+12*a^4*x^2*b^2*r^4+3*b^4*r^2*a^2*x^4-10*b^4*r^4*a^2*x^2-6*b^4*x^2*a^2*y^3"
    "*y0+8*x^2*b^6*y^3*y0-8*x^2*b^6*y*y0*r^2-42*b^6*y^3*y0*a^2-48*b^6*y^3*y0*r^2-7*y^4*a^4*b^2*x^2+50*b^4"
    "*y^3*a^2*y0*r^2+9*b^4*x^4*a^2*y^2-9*b^6*x^2*r^2*a^2+43*b^4*x^2*y^4*a^2-22*b^4*y^5*a^2*y0+50*b^4*y^3*"
    "a^4*y0-29*b^4*y^4*a^2*r^2+10*b^6*y^2*r^2*a^2+4*b^4*y^2*r^4*a^2-73*b^4*y^2*a^4*r^2+7*r^6*a^2*b^4+a^8*"
    "b^4+86*y*a^4*b^4*y0*r^2-78*y*a^2*b^6*y0*r^2-10*y^3*b^8*y0-28*y*a^6*b^4*y0+24*y*a^4*b^6*y0+10*y*b^8*y"
    "0*r^2-28*a^2*y*r^4*b^4*y0+4*a^4*y^3*r^2*b^2*y0-18*a^6*y*r^2*y0*b^2+4*a^4*y*r^4*b^2*y0-9*a^4*y^4*r^2*"
    "b^2+14*a^4*y^2*r^4*b^2+24*y*b^6*r^4*y0-2*a^8*b^2*x^2-6*y^3*a^6*y0*b^2+4*y*a^8*y0*b^2+x^4*a^4*y^4+y^4"
    "*b^6*a^2-4*a^8*y^2*b^2+22*a^6*y^2*b^4-2*y^3*b^2*r^2*a^2*y0*x^2-2*y^4*a^4*x^2*r^2-2*x^4*b^4*y*y0*r^2-"
    "b^2*r^2*a^2*x^4*y^2-r^8*a^2*b^2+r^8*a^4+a^8*x^4-2*y^8*b^2*a^2+a^4*x^8-4*a^4*x^6*r^2+6*a^4*x^4*r^4+b^"
    "2*r^2*a^2*x^6-3*b^2*r^4*a^2*x^4-2*a^6*r^6+2*a^6*x^6+a^8*r^4-y^6*b^2*a^2*x^2+2*x^2*y*b^4*r^4*y0-2*r^6"
    "*a^4*y^2+5*r^6*b^2*y^2*a^2-2*a^8*x^2*r^2+y^4*a^4*r^4-9*y^4*b^2*r^4*a^2+2*a^2*y^7*b^2*y0-2*a^6*y^2*r^"
    "4-4*y^5*b^2*a^2*y0*r^2+2*y^3*a^2*r^4*b^2*y0+4*x^2*a^6*y^2*r^2+6*x^2*a^4*y^2*r^4+5*y^4*b^2*x^2*a^2*r^"
    "2-7*x^2*b^2*y^2*r^4*a^2+2*y^5*b^2*a^2*y0*x^2-4*x^2*b^4*y^3*y0*r^2+7*y^6*b^2*a^2*r^2+3*r^6*b^2*x^2*a^"
    "2+2*x^2*b^4*y^5*y0+4*b^2*x^4*y^4*a^2+2*a^4*x^6*y^2-6*a^6*x^4*r^2-4*r^6*a^4*x^2+2*x^4*b^4*y^3*y0+3*b^"
    "2*x^6*a^2*y^2+6*r^4*a^6*x^2-6*a^4*x^4*r^2*y^2-2*a^8*b^2*r^2-41*a^4*y^4*b^4-2*x^4*a^6*y^2+4*a^6*b^6-1"
    "1*b^6*r^4*a^2+5*b^8*r^2*a^2-10*b^4*a^6*r^2+2*b^4*a^4*r^4+7*r^2*a^4*b^6+8*r^4*a^6*b^2-5*r^6*a^4*b^2)",
    "b^2*(-3*y^6*b^4*a^2*x^2-9*a^4*r^6*b^4+2*a^6*b^8+2*a^8*r^4*b^2-19*a^6*r^2*b^6+32*a^6*b^4*r^4-13*a^8*b"
    "^4*r^2+20*a^4*b^8*r^2-10*a^4*b^6*r^4+8*a^8*b^6+24*y^2*b^10*a^2-15*a^6*r^6*b^2+10*a^6*x^6*b^2-17*a^6*"
    "x^4*y^2*b^2-39*y^2*b^8*x^2*a^2+23*a^6*y^2*x^2*b^4-16*a^8*x^2*y^2*b^2-37*a^4*y^4*x^2*b^4+24*x^2*y^4*a"
    "^6*b^2-16*b^10*y^3*y0+2*b^4*x^6*a^4+94*y^4*b^6*x^2*a^2+9*y^2*b^6*x^4*a^2-52*b^6*x^2*a^4*y^2+48*b^4*x"
    "^4*a^4*y^2-8*b^10*a^4-18*a^6*b^4*x^4+8*b^10*r^2*a^2-22*b^8*r^4*a^2+21*b^6*r^6*a^2+16*b^10*y*y0*r^2-8"
    "*r^8*a^2*b^4+8*r^8*a^4*b^2-16*b^6*x^4*a^4+21*b^8*x^2*a^4+2*y^3*b^4*r^2*a^2*y0*x^2-20*y^4*a^4*b^2*x^2"
    "*r^2-2*a^10*b^4-2*a^10*x^4+4*a^10*b^2*x^2+a^4*x^10-3*a^8*x^6-19*a^8*b^4*x^2+14*a^8*x^4*b^2-16*a^4*b^"
    "2*y^6*x^2-2*a^6*x^6*y^2+5*y^4*a^4*x^6+4*a^4*x^8*y^2-6*x^4*a^6*y^4+6*x^4*a^8*y^2+2*y^6*a^4*x^4+6*b^6*"
    "x^2*a^6-14*y^4*b^8*a^2+24*b^6*y^6*a^2+20*a^6*y^2*b^6-4*x^4*b^6*y*y0*r^2-8*b^4*r^2*a^2*x^4*y^2-8*a^4*"
    "x^6*b^2*r^2+24*a^4*x^4*b^2*r^4+b^4*r^2*a^2*x^6-10*b^4*r^4*a^2*x^4+4*x^4*b^6*y^3*y0+3*b^4*x^6*a^2*y^2"
    "+4*b^4*a^4*x^2*r^4+40*r^4*a^6*x^2*b^2-10*r^2*a^4*x^2*b^6+17*r^6*b^4*x^2*a^2-24*r^6*a^4*x^2*b^2-20*a^"
    "4*x^4*b^2*r^2*y^2-30*x^2*b^4*y^2*r^4*a^2-2*x^2*a^2*y*r^4*b^4*y0+40*x^2*a^4*y^2*r^4*b^2-12*b^6*x^2*r^"
    "4*a^2+8*x^2*b^6*y^5*y0+6*b^4*x^4*y^4*a^2+3*b^6*x^4*a^2*r^2-35*a^6*x^4*b^2*r^2+16*y^4*b^4*x^2*a^2*r^2"
    "+116*y^3*a^2*b^6*y0*r^2-4*y^5*b^4*a^2*y0*r^2+2*y^3*a^2*r^4*b^4*y0+34*x^2*a^6*y^2*b^2*r^2-20*x^2*b^6*"
    "y^3*y0*r^2+10*b^8*x^2*y0*y^3-13*b^8*x^2*r^2*a^2-50*y^5*b^6*y0*a^2-10*y^5*b^6*y0*r^2+39*y^6*b^4*a^2*r"
    "^2-8*y^4*a^4*b^2*x^4-67*y^4*a^4*b^4*r^2-31*y^4*b^6*a^2*r^2-8*y^3*a^6*b^4*y0+8*y^3*b^6*r^4*y0+24*y^4*"
    "a^6*r^2*b^2-16*y^6*a^4*r^2*b^2+28*y^4*a^4*r^4*b^2-56*y^4*b^4*r^4*a^2+3*b^4*a^4*x^4*r^2+6*b^4*a^6*x^2"
    "*r^2+4*a^8*y^2*b^4-10*y^8*b^4*a^2+100*a^4*y^3*b^6*y0-17*a^6*y^2*b^2*r^4-16*a^8*y^2*b^2*r^2-178*a^4*b"
    "^6*y^2*r^2+48*a^4*b^4*r^4*y^2-94*b^8*y^3*y0*a^2-114*b^8*y^3*y0*r^2+32*b^8*y^2*a^2*r^2-14*b^6*r^4*y^2"
    "*a^2-20*r^6*a^4*b^2*y^2+35*r^6*b^4*y^2*a^2+6*y*a^8*b^4*y0-54*y*a^6*b^6*y0+56*y*b^8*r^4*y0-12*b^4*y*a"
    "^4*x^2*y0*r^2+30*b^4*y*a^6*x^2*y0-2*b^6*y^3*a^2*y0*x^2-48*b^6*y*a^4*y0*x^2+32*b^6*y*a^2*x^2*y0*r^2-8"
    "2*b^4*y^2*a^4*x^2*r^2-10*b^8*x^2*y*y0*r^2-70*b^6*y^2*x^2*a^2*r^2+8*a^4*y^3*b^4*y0*r^2-34*y*a^6*b^4*y"
    "0*r^2+170*y*a^4*b^6*y0*r^2+10*y*a^4*r^4*b^4*y0-66*y*a^2*b^6*r^4*y0-152*y*b^8*a^2*y0*r^2+77*a^6*y^2*b"
    "^4*r^2+58*b^8*y^5*y0+48*y*a^4*b^8*y0-52*a^4*y^4*b^6+2*b^4*y^9*y0+4*b^6*y^7*y0+6*b^4*y^7*y0*x^2-12*a^"
    "6*y^4*b^4+12*x^2*a^6*y^4*r^2+10*x^2*y^3*b^4*r^4*y0-12*x^2*a^8*y^2*r^2+4*r^8*a^4*y^2-7*r^8*b^2*y^2*a^"
    "2+2*y^6*a^4*r^4-2*y^3*b^4*r^6*y0-4*y^6*a^4*x^2*r^2-6*b^4*y^7*y0*r^2+11*b^2*y^6*x^4*a^2+4*b^2*y^8*x^2"
    "*a^2+4*b^2*y^8*a^2*r^2-13*b^2*y^6*r^4*a^2+6*b^4*y^5*r^4*y0+5*r^8*a^4*x^2-4*r^8*b^2*x^2*a^2-16*a^8*b^"
    "2*x^2*r^2+9*a^8*x^4*r^2-9*a^8*r^4*x^2-5*a^4*x^8*r^2+10*a^4*x^6*r^4+b^2*r^2*a^2*x^8-4*b^2*r^4*a^2*x^6"
    "+2*x^6*b^4*y^3*y0+3*b^2*x^8*a^2*y^2+6*r^6*b^2*x^4*a^2-10*r^6*a^4*x^4+6*x^4*b^4*y^5*y0+10*b^2*x^6*y^4"
    "*a^2-12*x^4*b^2*y^2*r^4*a^2+24*x^4*a^4*y^2*r^4-5*y^4*b^2*x^4*a^2*r^2-10*x^4*b^4*y^3*y0*r^2-6*a^6*x^2"
    "*y^2*r^4-15*y^4*a^4*x^4*r^2-2*x^6*b^4*y*y0*r^2-2*b^2*r^2*a^2*x^6*y^2+4*r^4*x^4*b^4*y*y0+15*x^2*y^4*a"
    "^4*r^4-20*x^2*y^4*b^2*r^4*a^2-16*x^2*r^6*a^4*y^2+18*x^2*r^6*b^2*y^2*a^2+12*x^2*y*b^6*r^4*y0+6*a^6*x^"
    "4*r^2*y^2-16*a^4*x^6*r^2*y^2-14*b^4*y^5*x^2*y0*r^2+2*b^2*y^6*x^2*a^2*r^2-6*y^4*a^6*r^4-5*y^4*r^6*a^4"
    "+15*y^4*r^6*b^2*a^2+6*a^8*y^2*r^4+2*a^6*r^6*y^2+2*y*b^4*r^6*a^2*y0-2*y*b^6*r^6*y0+20*y^6*a^4*b^4+4*a"
    "^10*x^2*r^2-2*r^6*x^2*b^4*y*y0-2*a^10*r^4+4*a^10*b^2*r^2+3*a^8*r^6+r^10*a^2*b^2-r^10*a^4)",
    "y^2-2*y*y0+y0^2+x^2-2*x*x0+x0^2-r^2",
    "b^2*y0*x-b^2*y0*x0-a^2*x0*y+a^2*x0*y0",
    "b^2*(x0*y0*x+y*y0^2-y0*x^2-y0*y^2-y0*a^2+y0*r^2+y*a^2)",
};

}  // namespace

const std::string& general_offset_text(ConicKind kind) {
  static const std::string parabola(kGeneralParabola);
  static const std::string ellipse(kGeneralEllipse);
  static const std::string hyperbola(kGeneralHyperbola);
  switch (kind) {
    case ConicKind::Parabola:
      return parabola;
    case ConicKind::Ellipse:
      return ellipse;
    case ConicKind::Hyperbola:
      break;
  }
  return hyperbola;
}

const std::vector<ReferenceInstance>& reference_instances() {
  static const std::vector<ReferenceInstance> table = {
      {1, ConicKind::Parabola, "1/3", "", "", "1/4",
       "331776 x^6-42192 x^2+48400 y^2-448512 y^3-84480 x^2 y+589824 y^4+28032 y -25344 x^4+113817"
       "6 x^2 y^2-884736 x^2 y^3-1105920 x^4 y-5329+331776 x^4 y^2"},
      {2, ConicKind::Parabola, "1/3", "", "", "2/3",
       "768 y-288 x^2-1728 y^3+1944 x^2 y^2-891 x^4-2430 x^4 y -1944 x^2 y^3+1296 y^4+729 x^4 y^2+"
       "729 x^6-256"},
      {3, ConicKind::Parabola, "1/3", "", "", "3/2",
       "83808 y+52812 x^2+16900 y^2-37248 y^3-4896 x^2 y^2-34416 x^4-17280 x^4 y -13824 x^2 y^3+92"
       "16 y^4+5184 x^4 y^2+5184 x^6-84681+6240 x^2 y"},
      {4, ConicKind::Ellipse, "", "3", "3/2", "1/2",
       "256 x^8+2080 x^6-41685 x^2+44100-25356 y^2+5353 y^4-4751 x^4-488 y^6-3360 y^4 x^2 -4680 y^"
       "2 x^4+528 y^4 x^4+640 x^6 y^2+160 y^6 x^2+16 y^8+21410 x^2 y^2"},
      {5, ConicKind::Ellipse, "", "3", "3/2", "3/4",
       "-29673216 x^4+19035648 y^4+95178240 x^2 y^2-1916928 y^6-14376960 y^4 x^2 -21012480 y^2 x^4"
       "+7372800 x^6+65536 y^8+2162688 y^4 x^4+655360 y^6 x^2 +2621440 x^6 y^2+1048576 x^8-7936185"
       "6 y^2+119574225-198404640 x^2"},
      {6, ConicKind::Ellipse, "", "3", "3/2", "4/3",
       "23461560 x^2 y^2+1221025+186624 x^8-2984040 y^4 x^2-5015520 y^2 x^4 -284472 y^6+384912 y^4"
       " x^4-43658160 x^2+518400 x^6+466560 x^6 y^2 +116640 y^6 x^2+11664 y^8-2228394 y^2-10769184"
       " x^4+1344177 y^4"},
      {7, ConicKind::Hyperbola, "", "1", "1", "1/2",
       "225+64 y^8+288 x^6+480 x^2 y^4-800 y^2 x^4-480 y^6-128 y^4 x^4 -1180 y^2+516 x^2-1320 x^2 "
       "y^2+532 x^4+1236 y^4+64 x^8"},
      {8, ConicKind::Hyperbola, "", "3/2", "1", "2/3",
       "9447840 x^6 y^2-4199040 y^6 x^2+53800200 x^6+1679616 y^8+124857369 x^4 +127471968 y^4-1593"
       "39960 x^2 y^2-24820992 y^6+46539360 y^4 x^2-105471720 y^2 x^4 -4933872 y^4 x^4+120670225+8"
       "503056 x^8-250879824 y^2+156799890 x^2"},
      {9, ConicKind::Hyperbola, "", "3/2", "1", "4/3",
       "-1627128 x^6+8503056 x^8+30525625+83351034 x^2-1109487600 y^2+264529800 x^2 y^2 +51521913 "
       "x^4+381560544 y^4+349920 y^4 x^2-188052840 y^2 x^4-43856640 y^6-4933872 y^4 x^4 +9447840 x"
       "^6 y^2-4199040 y^6 x^2+1679616 y^8"},
  };
  return table;
}

std::vector<std::string> reference_basis_text(ConicKind kind) {
  if (kind == ConicKind::Parabola) return {std::begin(kParabolaBasis), std::end(kParabolaBasis)};
  if (kind == ConicKind::Ellipse) return {std::begin(kEllipseBasis), std::end(kEllipseBasis)};
  return {};
}

}  // namespace conoff
