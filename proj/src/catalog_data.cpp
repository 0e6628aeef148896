#include <string>

// Embedded copy of the symmetric-space catalog. The grammar is documented in
// README.md ("Catalog file format"); `symidx catalog lint` validates every
// record of this file or of a --catalog override.

namespace symidx::detail {

extern const char* const kBuiltinCatalog;
const char* const kBuiltinCatalog = R"CAT(
# Irreducible Riemannian symmetric spaces, one record per dual pair.
#
#   record := key: nc-id ~ compact-id | params | dim | rank | roots | m1 | m2 | isotropy | flags
#
#   ids      id templates; {expr} substitutes an integer expression in the params
#   params   '-' or comma list of name>=expr bounds, declared left to right
#   roots    family token with rank expression: A{n-1}, B{p}, C{p}, D{p}, BC{p},
#            A1, BC1, E6, E7, E8, F4, G2
#   m1, m2   long/short restricted-root multiplicities (m2 sums a non-reduced pair)
#   isotropy '+'-joined factors: su{e} so{e} sp{e} u1 g2 f4 e6 e7 e8
#   flags    i inner | I inner iff p,q not both odd | h hermitian | H hermitian iff
#            first param = 2 | g group manifold | c constant curvature | x rank-1 BC
#            multiplicity labelling sourced from the classification literature
#
# Rank-one hyperbolic spaces and their compact duals
RH    : SO(1,{n})/SO{n} ~ S{n}                           | n>=2        | n             | 1   | A1     | n-1   | n-1       | so{n}          | cIH
CH    : SU(1,{n})/S(U1xU{n}) ~ CP{n}                     | n>=2        | 2*n           | 1   | BC1    | 2*n-1 | 2*n-1     | su{n}+u1       | hix
HH    : Sp(1,{n})/Sp1xSp{n} ~ HP{n}                      | n>=2        | 4*n           | 1   | BC1    | 4*n-1 | 4*n-1     | sp1+sp{n}      | ix
FII   : F4^-20/Spin9 ~ OP2                               | -           | 16            | 1   | BC1    | 15    | 15        | so9            | ix
# Classical families
AI    : SL{n}(R)/SO{n} ~ SU{n}/SO{n}                     | n>=3        | n*(n+1)/2-1   | n-1 | A{n-1} | 1     | 1         | so{n}          | -
AII   : SU*{2*n}/Sp{n} ~ SU{2*n}/Sp{n}                   | n>=3        | (n-1)*(2*n+1) | n-1 | A{n-1} | 4     | 4         | sp{n}          | -
AIIIa : SU({p},{q})/S(U{p}xU{q}) ~ SU{p+q}/S(U{p}xU{q})  | p>=2,q>=p+1 | 2*p*q         | p   | BC{p}  | 2     | 2*(q-p)+1 | su{p}+su{q}+u1 | hi
AIIIb : SU({p},{p})/S(U{p}xU{p}) ~ SU{2*p}/S(U{p}xU{p})  | p>=3        | 2*p*p         | p   | C{p}   | 1     | 2         | su{p}+su{p}+u1 | hi
BDIa  : SO({p},{q})/SO{p}xSO{q} ~ SO{p+q}/SO{p}xSO{q}    | p>=2,q>=p+1 | p*q           | p   | B{p}   | 1     | q-p       | so{p}+so{q}    | IH
BDIb  : SO({p},{p})/SO{p}xSO{p} ~ SO{2*p}/SO{p}xSO{p}    | p>=4        | p*p           | p   | D{p}   | 1     | 1         | so{p}+so{p}    | I
CI    : Sp{r}(R)/U{r} ~ Sp{r}/U{r}                       | r>=3        | r*(r+1)       | r   | C{r}   | 1     | 1         | su{r}+u1       | hi
CIIa  : Sp({p},{q})/Sp{p}xSp{q} ~ Sp{p+q}/Sp{p}xSp{q}    | p>=2,q>=p+1 | 4*p*q         | p   | BC{p}  | 4     | 4*(q-p)+3 | sp{p}+sp{q}    | i
CIIb  : Sp({p},{p})/Sp{p}xSp{p} ~ Sp{2*p}/Sp{p}xSp{p}    | p>=2        | 4*p*p         | p   | C{p}   | 3     | 4         | sp{p}+sp{p}    | i
DIIIa : SO*{4*m}/U{2*m} ~ SO{4*m}/U{2*m}                 | m>=3        | 2*m*(2*m-1)   | m   | C{m}   | 1     | 4         | su{2*m}+u1     | hi
DIIIb : SO*{4*m+2}/U{2*m+1} ~ SO{4*m+2}/U{2*m+1}         | m>=2        | 2*m*(2*m+1)   | m   | BC{m}  | 4     | 5         | su{2*m+1}+u1   | hi
# Complex simple groups (compact group manifolds and their noncompact duals)
SLC   : SL{n}(C)/SU{n} ~ SU{n}                           | n>=3        | n*n-1         | n-1 | A{n-1} | 2     | 2         | su{n}          | g
SOCb  : SO{2*r+1}(C)/SO{2*r+1} ~ Spin{2*r+1}             | r>=2        | r*(2*r+1)     | r   | B{r}   | 2     | 2         | so{2*r+1}      | g
SPC   : Sp{r}(C)/Sp{r} ~ Sp{r}                           | r>=3        | r*(2*r+1)     | r   | C{r}   | 2     | 2         | sp{r}          | g
SOCd  : SO{2*r}(C)/SO{2*r} ~ Spin{2*r}                   | r>=4        | r*(2*r-1)     | r   | D{r}   | 2     | 2         | so{2*r}        | g
G2C   : G2(C)/G2 ~ G2                                    | -           | 14            | 2   | G2     | 2     | 2         | g2             | g
F4C   : F4(C)/F4 ~ F4                                    | -           | 52            | 4   | F4     | 2     | 2         | f4             | g
E6C   : E6(C)/E6 ~ E6                                    | -           | 78            | 6   | E6     | 2     | 2         | e6             | g
E7C   : E7(C)/E7 ~ E7                                    | -           | 133           | 7   | E7     | 2     | 2         | e7             | g
E8C   : E8(C)/E8 ~ E8                                    | -           | 248           | 8   | E8     | 2     | 2         | e8             | g
# Exceptional spaces
EI    : E6^6/Sp4 ~ E6/Sp4                                | -           | 42            | 6   | E6     | 1     | 1         | sp4            | -
EII   : E6^2/SU6xSp1 ~ E6/SU6xSp1                        | -           | 40            | 4   | F4     | 1     | 2         | su6+sp1        | i
EIII  : E6^-14/Spin10xU1 ~ E6/Spin10xU1                  | -           | 32            | 2   | BC2    | 6     | 9         | so10+u1        | hi
EIV   : E6^-26/F4 ~ E6/F4                                | -           | 26            | 2   | A2     | 8     | 8         | f4             | -
EV    : E7^7/SU8 ~ E7/SU8                                | -           | 70            | 7   | E7     | 1     | 1         | su8            | i
EVI   : E7^-5/SO12xSp1 ~ E7/SO12xSp1                     | -           | 64            | 4   | F4     | 1     | 4         | so12+sp1       | i
EVII  : E7^-25/E6xU1 ~ E7/E6xU1                          | -           | 54            | 3   | C3     | 1     | 8         | e6+u1          | hi
EVIII : E8^8/SO16 ~ E8/SO16                              | -           | 128           | 8   | E8     | 1     | 1         | so16           | i
EIX   : E8^-24/E7xSp1 ~ E8/E7xSp1                        | -           | 112           | 4   | F4     | 1     | 8         | e7+sp1         | i
FI    : F4^4/Sp3xSp1 ~ F4/Sp3xSp1                        | -           | 28            | 4   | F4     | 1     | 1         | sp3+sp1        | i
G     : G2^2/SO4 ~ G2/SO4                                | -           | 8             | 2   | G2     | 1     | 1         | sp1+sp1        | i

@ceiling 260

# Low-rank isomorphisms: out-of-range instantiations map to canonical records.
@alias SL2(R)/SO2 = SO(1,2)/SO2
@alias SL2(C)/SU2 = SO(1,3)/SO3
@alias Sp1(C)/Sp1 = SO(1,3)/SO3
@alias SO3(C)/SO3 = SO(1,3)/SO3
@alias SU*4/Sp2 = SO(1,5)/SO5
@alias Sp(1,1)/Sp1xSp1 = SO(1,4)/SO4
@alias SU(1,1)/S(U1xU1) = SO(1,2)/SO2
@alias SO(3,3)/SO3xSO3 = SL4(R)/SO4
@alias SU(2,2)/S(U2xU2) = SO(2,4)/SO2xSO4
@alias SO*8/U4 = SO(2,6)/SO2xSO6
@alias SO*6/U3 = SU(1,3)/S(U1xU3)
@alias Sp2(R)/U2 = SO(2,3)/SO2xSO3
@alias Sp2(C)/Sp2 = SO5(C)/SO5
@alias SO6(C)/SO6 = SL4(C)/SU4
)CAT";

}  // namespace symidx::detail
