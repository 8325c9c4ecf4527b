#pragma once

// Registry of commutation relations as data.
//
// params: space separated names; "name:sign" ranges over {+1,-1}, plain names over [0, cutoff/2].
// cond:   optional side condition, e.g. "k != l && t >= 1".
// lhs/rhs: printed form; oracle: corrected right-hand side derived from the basis actions
// (empty when the printed form is expected to hold).

#include <string_view>
#include <vector>

namespace chk {

struct RelationSpec {
    std::string_view id;
    std::string_view suite;
    std::string_view anchor;
    std::string_view params;
    std::string_view cond;
    std::string_view lhs;
    std::string_view rhs;
    std::string_view oracle;
};

inline const std::vector<RelationSpec>& relation_registry() {
    static const std::vector<RelationSpec> r{
        // sectorial oscillator, defining relations
        {"sect.def/ladder-bracket", "sectorial", R"([a_{sect}^{+},a_{sect}^{-}]=\frac{1}{10}\left(\mathbb{P}_1-\mathbb{P}_2\right))",
         "", "", "[as(1), as(-1)]", "1/10*(P1 - P2)", "1/10*(P2 - P1)"},
        {"sect.def/number1-ladder", "sectorial", R"([\mathbb{N}_1,a_{sect}^{\pm}]=\mp a_{sect}^{\pm})", "e:sign", "",
         "[N1, as(e)]", "-e*as(e)", ""},
        {"sect.def/number2-ladder", "sectorial", R"([\mathbb{N}_2,a_{sect}^{\pm}]=\pm a_{sect}^{\pm})", "e:sign", "",
         "[N2, as(e)]", "e*as(e)", ""},
        {"sect.def/projectors-commute", "sectorial", R"([\mathbb{P}_1,\mathbb{P}_2]=0)", "", "", "[P1, P2]", "0", ""},
        {"sect.def/numbers-commute", "sectorial", R"([\mathbb{N}_1,\mathbb{N}_2]=0)", "", "", "[N1, N2]", "0", ""},
        {"sect.def/number1-proj1", "sectorial", R"([\mathbb{N}_i,\mathbb{P}_j]=0)", "", "", "[N1, P1]", "0", ""},
        {"sect.def/number1-proj2", "sectorial", R"([\mathbb{N}_i,\mathbb{P}_j]=0)", "", "", "[N1, P2]", "0", ""},
        {"sect.def/number2-proj1", "sectorial", R"([\mathbb{N}_i,\mathbb{P}_j]=0)", "", "", "[N2, P1]", "0", ""},
        {"sect.def/number2-proj2", "sectorial", R"([\mathbb{N}_i,\mathbb{P}_j]=0)", "", "", "[N2, P2]", "0", ""},
        {"sect.def/proj1-raise", "sectorial", R"(\mathbb{P}_1a_{sect}^{+}=0)", "", "", "P1*as(1)", "0", ""},
        {"sect.def/lower-proj1", "sectorial", R"(a_{sect}^{-}\mathbb{P}_1=0)", "", "", "as(-1)*P1", "0", ""},
        {"sect.def/raise-proj2", "sectorial", R"(a_{sect}^{+}\mathbb{P}_2=0)", "", "", "as(1)*P2", "0", ""},
        {"sect.def/proj2-lower", "sectorial", R"(\mathbb{P}_2a_{sect}^{-}=0)", "", "", "P2*as(-1)", "0", ""},

        // sectorial level algebras
        {"sect.level/numbers-commute", "sectorial", R"([\mathbb{N}_1,\,\mathbb{N}_2]=0)", "", "", "[N1, N2]", "0", ""},
        {"sect.level/number1-diag", "sectorial", R"([\mathbb{N}_1,\,P^{k,\,l}_{k,\,l}]=0)", "k l", "",
         "[N1, P(k,l,k,l)]", "0", ""},
        {"sect.level/number2-diag", "sectorial", R"([\mathbb{N}_2,\,P^{k,\,l}_{k,\,l}]=0)", "k l", "",
         "[N2, P(k,l,k,l)]", "0", ""},
        {"sect.level/diag-diag", "sectorial", R"([P^{k,\,l}_{k\,l},\,P^{m,\,n}_{m\,n}]=0)", "k l m n", "",
         "[P(k,l,k,l), P(m,n,m,n)]", "0", ""},
        {"sect.level/number1-step", "sectorial", R"([\mathbb{N}_1,\,P^{k,\,l}_{k\mp 1,\,l\pm 1}]=\mp P^{k,\,l}_{k\mp 1,\,l\pm 1})",
         "e:sign k l", "", "[N1, P(k,l,k-e,l+e)]", "-e*P(k,l,k-e,l+e)", ""},
        {"sect.level/number2-step", "sectorial", R"([\mathbb{N}_2,\,P^{k,\,l}_{k\mp 1,\,l\pm 1}]=\pm P^{k,\,l}_{k\mp 1,\,l\pm 1})",
         "e:sign k l", "", "[N2, P(k,l,k-e,l+e)]", "e*P(k,l,k-e,l+e)", ""},
        {"sect.level/step-diag", "sectorial",
         R"([P^{m,\,n}_{m\mp 1,\,n\pm 1},\,P^{k,\,l}_{k,\,l}]=\delta_{m,\,k}\delta_{n,\,l}P^{k,\,l}_{m\mp 1,\,n\pm 1})",
         "e:sign m n k l", "", "[P(m,n,m-e,n+e), P(k,l,k,l)]",
         "d(m,k)*d(n,l)*P(k,l,m-e,n+e) - d(k,m-e)*d(l,n+e)*P(m,n,k,l)", ""},
        {"sect.level/step-step", "sectorial",
         R"([P^{m,\,n}_{m-1,\,n+1},\,P^{k,\,l}_{k+1,\,l-1}]=\delta_{m,\,k+1}\delta_{n,\,l-1})", "m n k l", "",
         "[P(m,n,m-1,n+1), P(k,l,k+1,l-1)]", "d(m,k+1)*d(n,l-1)*(P(k,l,k,l) - P(k+1,l-1,k+1,l-1))", ""},

        // sectorial ideal relations
        {"sect.ideal/ladder-bracket", "sectorial", R"([\asm,\asp]=\frac{1}{10} \left(\Poco - \Pooc\right))", "", "",
         "[as(-1), as(1)]", "1/10*(P1 - P2)", ""},
        {"sect.ideal/number1-ladder", "sectorial", R"([\mathbb{N}_1,\aspm]=\mp\aspm)", "e:sign", "", "[N1, as(e)]",
         "-e*as(e)", ""},
        {"sect.ideal/number2-ladder", "sectorial", R"([\mathbb{N}_2,\aspm]=\pm\aspm)", "e:sign", "", "[N2, as(e)]",
         "e*as(e)", ""},
        {"sect.ideal/numbers-commute", "sectorial", R"([\mathbb{N}_1,\mathbb{N}_2]=0)", "", "", "[N1, N2]", "0", ""},
        {"sect.ideal/ladder-row-series", "sectorial",
         R"([\aspm,\Pnck{n}{k}]=\frac{1}{\sqrt{10}}\left(\Pnck{n\pm 1}{k}-\Pnck{n}{k\pm 1}\right))", "e:sign n k", "",
         "[as(e), Pbk(n,k)]", "1/sqrt(10)*(Pbk(n+e,k) - Pbk(n,k+e))",
         "1/sqrt(10)*(Pbk(n+e,k) - Pbk(n,k-e) + d(e,1)*P(0,k-1,k-1-n,n) - d(e,-1)*P(n-k-1,k,0,n-1))"},
        {"sect.ideal/ladder-col-series", "sectorial",
         R"([\aspm,\Pnkc{n}{k}]=\frac{1}{\sqrt{10}}\left(\Pnkc{n\mp 1}{k}-\Pnkc{n}{k\pm 1}\right))", "e:sign n k", "",
         "[as(e), Pkb(n,k)]", "1/sqrt(10)*(Pkb(n-e,k) - Pkb(n,k+e))",
         "1/sqrt(10)*(Pkb(n-e,k) - Pkb(n,k+e) + d(e,-1)*P(k-1,0,n,k-1-n) - d(e,1)*P(k,n-k-1,n-1,0))"},
        {"sect.ideal/ladder-unit-down", "sectorial",
         R"([\asmp,\Pnkm{k,\,l}{k-t}{l+t}]=\frac{1}{\sqrt{10}}\left(\Pnkm{k,\,l}{k-t\pm 1}{l+t\mp 1}-\Pnkm{k\mp 1,\,l\pm 1}{k-t}{l+t}\right))",
         "e:sign k l t", "", "[as(-e), P(k,l,k-t,l+t)]",
         "1/sqrt(10)*(P(k,l,k-t+e,l+t-e) - P(k-e,l+e,k-t,l+t))",
         "nn(k-t)/sqrt(10)*(P(k,l,k-t+e,l+t-e) - P(k-e,l+e,k-t,l+t))"},
        {"sect.ideal/ladder-unit-up", "sectorial",
         R"([\asmp,\Pnkm{k,\,l}{k+t}{l-t}]=\frac{1}{\sqrt{10}}\left(\Pnkm{k,\,l}{k+t\pm 1}{l-t\mp 1}-\Pnkm{k\mp 1,\,l\pm 1}{k+t}{l-t}\right))",
         "e:sign k l t", "", "[as(-e), P(k,l,k+t,l-t)]",
         "1/sqrt(10)*(P(k,l,k+t+e,l-t-e) - P(k-e,l+e,k+t,l-t))",
         "nn(l-t)/sqrt(10)*(P(k,l,k+t+e,l-t-e) - P(k-e,l+e,k+t,l-t))"},
        {"sect.ideal/row-col-series", "sectorial",
         R"([\Pnck{n}{k},\Pnkc{m}{l}]=\left(\Pnkm{l,\,m+k-l}{m+k-n}{n}-\Pnkm{n+l-k,\,k}{m}{n+l-m}\right))", "n k m l", "",
         "[Pbk(n,k), Pkb(m,l)]", "P(l,m+k-l,m+k-n,n) - P(n+l-k,k,m,n+l-m)", ""},
        {"sect.ideal/row-row-series", "sectorial", R"([\Pnck{n}{k},\Pnck{m}{l}]=\Pnck{n}{l}-\Pnck{m}{k})", "n k m l", "",
         "[Pbk(n,k), Pbk(m,l)]", "Pbk(n,l) - Pbk(m,k)",
         "d(m,k)*(Pbk(n,l) - sum(j, n-l, m-l-1, P(j,l,j+l-n,n))) - d(n,l)*(Pbk(m,k) - sum(j, m-k, n-k-1, P(j,k,j+k-m,m)))"},
        {"sect.ideal/col-col-series", "sectorial", R"([\Pnkc{n}{k},\Pnkc{m}{l}]=\Pnkc{n}{l}-\Pnkc{m}{k})", "n k m l", "",
         "[Pkb(n,k), Pkb(m,l)]", "Pkb(n,l) - Pkb(m,k)",
         "d(m,k)*(Pkb(n,l) - sum(j, n-l, m-l-1, P(l,j,n,j+l-n))) - d(n,l)*(Pkb(m,k) - sum(j, m-k, n-k-1, P(k,j,m,j+k-m)))"},
        {"sect.ideal/number1-row-series", "sectorial", R"([\mathbb{N}_1,\Pnck{n}{k}]=(k-n)\Pnck{n}{k})", "n k", "",
         "[N1, Pbk(n,k)]", "(k-n)*Pbk(n,k)", ""},
        {"sect.ideal/number2-row-series", "sectorial", R"([\mathbb{N}_2,\Pnck{n}{k}]=(n-k)\Pnck{n}{k})", "n k", "",
         "[N2, Pbk(n,k)]", "(n-k)*Pbk(n,k)", ""},
        {"sect.ideal/number1-col-series", "sectorial", R"([\mathbb{N}_1,\Pnkc{n}{k}]=(n-k)\Pnkc{n}{k})", "n k", "",
         "[N1, Pkb(n,k)]", "(n-k)*Pkb(n,k)", ""},
        {"sect.ideal/number2-col-series", "sectorial", R"([\mathbb{N}_2,\Pnkc{n}{k}]=(k-n)\Pnkc{n}{k})", "n k", "",
         "[N2, Pkb(n,k)]", "(k-n)*Pkb(n,k)", ""},
        {"sect.ideal/unit-down-row-series", "sectorial",
         R"([\Pnkm{k,\,l}{k-t}{l+t},\Pnck{n}{m}]=\Pnkm{k+n-m,\,m}{k-t}{n+t}-\Pnkm{k,\,l}{k+l-n}{n})", "k l t n m", "",
         "[P(k,l,k-t,l+t), Pbk(n,m)]", "P(k+n-m,m,k-t,n+t) - P(k,l,k+l-n,n)",
         "d(l,n)*P(k+n-m,m,k-t,n+t) - d(l+t,m)*nn(k-t)*P(k,l,k+l-n,n)"},
        {"sect.ideal/unit-up-row-series", "sectorial",
         R"([\Pnkm{k,\,l}{k+t}{l-t},\Pnck{n}{m}]=\Pnkm{k+l-m,\,m}{k+t}{l-t}-\Pnkm{k,\,l}{k+l-n}{n})", "k l t n m", "",
         "[P(k,l,k+t,l-t), Pbk(n,m)]", "P(k+l-m,m,k+t,l-t) - P(k,l,k+l-n,n)",
         "d(l,n)*P(k+l-m,m,k+t,l-t) - d(l-t,m)*P(k,l,k+l-n,n)"},
        {"sect.ideal/unit-up-col-series", "sectorial",
         R"([\Pnkm{k,\,l}{k+t}{l-t},\Pnkc{n}{m}]=\Pnkm{m,\,k+l-m}{k+t}{l-t}-\Pnkm{k,\,l}{n}{k+l-n})", "k l t n m", "",
         "[P(k,l,k+t,l-t), Pkb(n,m)]", "P(m,k+l-m,k+t,l-t) - P(k,l,n,k+l-n)",
         "d(k,n)*P(m,k+l-m,k+t,l-t) - d(k+t,m)*nn(l-t)*P(k,l,n,k+l-n)"},
        {"sect.ideal/unit-down-col-series", "sectorial",
         R"([\Pnkm{k,\,l}{k-t}{l+t},\Pnkc{n}{m}]=\Pnkm{m,\,k+l-m}{k-t}{l+t}-\Pnkm{k,\,l}{n}{k+l-n})", "k l t n m", "",
         "[P(k,l,k-t,l+t), Pkb(n,m)]", "P(m,k+l-m,k-t,l+t) - P(k,l,n,k+l-n)",
         "d(k,n)*P(m,k+l-m,k-t,l+t) - d(k-t,m)*P(k,l,n,k+l-n)"},
        {"sect.ideal/unit-unit-same", "sectorial",
         R"([\Pnkm{k,\,l}{k\mp t}{l\pm t},\Pnkm{m,\,n}{m\mp s}{n\pm s}]=\delta_{k,\,m\mp s}\delta_{l,\,n\pm s})",
         "e:sign k l t m n u", "", "[P(k,l,k-e*t,l+e*t), P(m,n,m-e*u,n+e*u)]",
         "d(k,m-e*u)*d(l,n+e*u)*P(m,n,k-e*t,l+e*t) - d(m,k-e*t)*d(n,l+e*t)*P(k,l,m-e*u,n+e*u)", ""},
        {"sect.ideal/unit-unit-opposite", "sectorial",
         R"([\Pnkm{k,\,l}{k-t}{l+t},\Pnkm{m,\,n}{m+s}{n-s}]=\delta_{k,\,m+s}\delta_{l,\,n-s})", "k l t m n u", "",
         "[P(k,l,k-t,l+t), P(m,n,m+u,n-u)]",
         "d(k,m+u)*d(l,n-u)*P(m,n,k-t,l+t) - d(m,k-t)*d(n,l+t)*P(k,l,m+u,n-u)", ""},
        {"sect.ideal/number1-unit", "sectorial",
         R"([\mathbb{N}_1,\Pnkm{k,\,l}{k\mp t}{l\pm t}]=\mp t\Pnkm{k,\,l}{k\mp t}{l\pm t})", "e:sign k l t", "",
         "[N1, P(k,l,k-e*t,l+e*t)]", "-e*t*P(k,l,k-e*t,l+e*t)", ""},
        {"sect.ideal/number2-unit", "sectorial",
         R"([\mathbb{N}_2,\Pnkm{k,\,l}{k\mp t}{l\pm t}]=\pm t\Pnkm{k,\,l}{k\mp t}{l\pm t})", "e:sign k l t", "",
         "[N2, P(k,l,k-e*t,l+e*t)]", "e*t*P(k,l,k-e*t,l+e*t)", ""},

        // radial oscillator, defining relations
        {"rad.def/ladder-bracket", "radial", R"([a^{-}_{rad},a^{+}_{rad}]=\frac{4}{5}I_B(\ts\half,\ts\half))", "", "",
         "[ar(-1), ar(1)]", "4/5*IB(1/2,1/2)", ""},
        {"rad.def/lower-boundary", "radial", R"(a^{-}_{rad}I_B(\ts\half,\ts\half)=0)", "", "", "ar(-1)*IB(1/2,1/2)", "0",
         ""},
        {"rad.def/boundary-raise", "radial", R"(I_B(\ts\half,\ts\half)a^{+}_{rad}=0)", "", "", "IB(1/2,1/2)*ar(1)", "0",
         ""},
        {"rad.def/number1-ladder", "radial", R"([\mathbb{N}_1,a^{\pm}_{rad}]=\pm a^{\pm}_{rad})", "e:sign", "",
         "[N1, ar(e)]", "e*ar(e)", ""},
        {"rad.def/number2-ladder", "radial", R"([\mathbb{N}_2,a^{\pm}_{rad}]=\pm a^{\pm}_{rad})", "e:sign", "",
         "[N2, ar(e)]", "e*ar(e)", ""},
        {"rad.def/number1-boundary", "radial", R"([\mathbb{N}_1,I_B(\ts\half,\ts\half)]=0)", "", "",
         "[N1, IB(1/2,1/2)]", "0", ""},
        {"rad.def/number2-boundary", "radial", R"([\mathbb{N}_2,I_B(\ts\half,\ts\half)]=0)", "", "",
         "[N2, IB(1/2,1/2)]", "0", ""},

        // radial level and ideal relations
        {"rad.ideal/boundary-identity", "radial",
         R"(I_B(\frac{1}{2},\frac{1}{2})=\frac{1}{2}\left(\Pnck{0}{0}+\Pnkc{0}{0}-\Pnkm{0,\,0}{0}{0}\right))", "", "",
         "IB(1/2,1/2)", "1/2*(Pbk(0,0) + Pkb(0,0) - P(0,0,0,0))", ""},
        {"rad.level/unit-unit-same", "radial",
         R"([\Pnkm{k,\,l}{k\pm t}{l\pm t},\,\Pnkm{m,\,n}{m\pm s}{n\pm s}]=\delta_{k,\,m\pm s}\delta_{l,\,n\pm s})",
         "e:sign k l t m n u", "", "[P(k,l,k+e*t,l+e*t), P(m,n,m+e*u,n+e*u)]",
         "d(k,m+e*u)*d(l,n+e*u)*P(m,n,k+e*t,l+e*t) - d(m,k+e*t)*d(n,l+e*t)*P(k,l,m+e*u,n+e*u)", ""},
        {"rad.level/unit-unit-opposite", "radial",
         R"([\Pnkm{k,\,l}{k+ t}{l+ t},\,\Pnkm{m,\,n}{m-s}{n-s}]=\delta_{k,\,m-s}\delta_{l,\,n-s})", "k l t m n u", "",
         "[P(k,l,k+t,l+t), P(m,n,m-u,n-u)]",
         "d(k,m-u)*d(l,n-u)*P(m,n,k+t,l+t) - d(m,k+t)*d(n,l+t)*P(k,l,m-u,n-u)", ""},
        {"rad.level/number1-unit", "radial", R"([\mathbb{N}_1,\Pnkm{k,\,l}{k\pm t}{l\pm t}]=\pm t \Pnkm{k,\,l}{k\pm t}{l\pm t})",
         "e:sign k l t", "", "[N1, P(k,l,k+e*t,l+e*t)]", "e*t*P(k,l,k+e*t,l+e*t)", ""},
        {"rad.level/number2-unit", "radial", R"([\mathbb{N}_2,\Pnkm{k,\,l}{k\pm t}{l\pm t}]=\pm t \Pnkm{k,\,l}{k\pm t}{l\pm t})",
         "e:sign k l t", "", "[N2, P(k,l,k+e*t,l+e*t)]", "e*t*P(k,l,k+e*t,l+e*t)", ""},
        {"rad.level/numbers-commute", "radial", R"([\mathbb{N}_1,\mathbb{N}_2]=0)", "", "", "[N1, N2]", "0", ""},
        {"rad.ideal/numbers-commute", "radial", R"([\mathbb{N}_1,\mathbb{N}_2]=0)", "", "", "[N1, N2]", "0", ""},
        {"rad.ideal/number1-unit", "radial", R"([\mathbb{N}_j,\Pnkm{k,\,l}{k\pm t}{l\pm t}]=\pm t\Pnkm{k,\,l}{k\pm t}{l\pm t})",
         "e:sign k l t", "", "[N1, P(k,l,k+e*t,l+e*t)]", "e*t*P(k,l,k+e*t,l+e*t)", ""},
        {"rad.ideal/number2-unit", "radial", R"([\mathbb{N}_j,\Pnkm{k,\,l}{k\pm t}{l\pm t}]=\pm t\Pnkm{k,\,l}{k\pm t}{l\pm t})",
         "e:sign k l t", "", "[N2, P(k,l,k+e*t,l+e*t)]", "e*t*P(k,l,k+e*t,l+e*t)", ""},
        {"rad.ideal/number1-ladder", "radial", R"([\mathbb{N}_j,\arpm]=\pm\arpm)", "e:sign", "", "[N1, ar(e)]",
         "e*ar(e)", ""},
        {"rad.ideal/number2-ladder", "radial", R"([\mathbb{N}_j,\arpm]=\pm\arpm)", "e:sign", "", "[N2, ar(e)]",
         "e*ar(e)", ""},
        {"rad.ideal/number1-left-series", "radial", R"([\mathbb{N}_1,\,\Pnkm{k}{+}{l}]=(l-k)\Pnkm{k}{+}{l})", "k l", "",
         "[N1, Rl(1,k,l)]", "(l-k)*Rl(1,k,l)", ""},
        {"rad.ideal/number2-right-series", "radial", R"([\mathbb{N}_2,\,\Pnkm{k}{l}{+}]=(l-k)\Pnkm{k}{l}{+})", "k l", "",
         "[N2, Rr(1,k,l)]", "(l-k)*Rr(1,k,l)", ""},
        {"rad.ideal/number1-right-series", "radial", R"([\mathbb{N}_1,\,\Pnkm{k}{l}{+}]=(l-k)\Pnkm{l}{k}{+})", "k l", "",
         "[N1, Rr(1,k,l)]", "(l-k)*Rr(1,l,k)", "(l-k)*Rr(1,k,l)"},
        {"rad.ideal/number2-left-series", "radial", R"([\mathbb{N}_2,\,\Pnkm{k}{+}{l}]=(l-k)\Pnkm{k}{+}{l})", "k l", "",
         "[N2, Rl(1,k,l)]", "(l-k)*Rl(1,k,l)", ""},
        {"rad.ideal/unit-unit", "radial",
         R"([\Pnkm{k,\,l}{k\pm t}{l\pm t},\Pnkm{m,\,n}{m\pm s}{n\pm s}]=\delta_{k,\,m\pm s}\delta_{l,\,n\pm s})",
         "e:sign k l t m n u", "", "[P(k,l,k+e*t,l+e*t), P(m,n,m+e*u,n+e*u)]",
         "d(k,m+e*u)*d(l,n+e*u)*P(m,n,k+e*t,l+e*t) - d(m,k+e*t)*d(n,l+e*t)*P(k,l,m+e*u,n+e*u)", ""},
        {"rad.ideal/unit-ladder", "radial",
         R"([\Pnkm{k,\,l}{k\pm t}{l\pm t},\arpm]=\sqrt{\frac{2}{5}}\left(\Pnkm{k\mp 1,\,l\mp 1}{k\pm t}{l\pm t}-\Pnkm{k,\,l}{k\pm t\pm 1}{l\pm t\pm 1}\right))",
         "e:sign k l t", "", "[P(k,l,k+e*t,l+e*t), ar(e)]",
         "sqrt(2/5)*(P(k-e,l-e,k+e*t,l+e*t) - P(k,l,k+e*t+e,l+e*t+e))", ""},
        {"rad.ideal/unit-left-series", "radial",
         R"([\Pnkm{k,\,l}{k\pm t}{l\pm t},\Pnkm{m}{+}{n}]=\Pnkm{k-n+m,\,m}{k\pm t}{n\pm t}-\Pnkm{k,\,m\mp t}{k\pm t-m+n}{n})",
         "e:sign k l t m n", "", "[P(k,l,k+e*t,l+e*t), Rl(1,m,n)]",
         "P(k-n+m,m,k+e*t,n+e*t) - P(k,m-e*t,k+e*t-m+n,n)",
         "d(l,n)*nn(k-n)*P(k-n+m,m,k+e*t,n+e*t) - d(l+e*t,m)*nn(k+e*t-m)*P(k,m-e*t,k+e*t-m+n,n)"},
        {"rad.ideal/unit-right-series", "radial",
         R"([\Pnkm{k,\,l}{k\pm t}{l\pm t},\Pnkm{m}{n}{+}]=\Pnkm{m,\,l-n+m}{k\pm t}{l\pm t}-\Pnkm{m\mp t,\,l}{n}{l\pm t-m+n})",
         "e:sign k l t m n", "", "[P(k,l,k+e*t,l+e*t), Rr(1,m,n)]",
         "P(m,l-n+m,k+e*t,l+e*t) - P(m-e*t,l,n,l+e*t-m+n)",
         "d(k,n)*nn(l-n)*P(m,l-n+m,k+e*t,l+e*t) - d(k+e*t,m)*nn(l+e*t-m)*P(m-e*t,l,n,l+e*t-m+n)"},
        {"rad.ideal/ladder-bracket", "radial",
         R"([\arm,\arp]=\frac{2}{5}\left(\Pnck{0}{0}-\Pnkc{0}{0}-\Pnkm{0,\,0}{0}{0}\right))", "", "", "[ar(-1), ar(1)]",
         "2/5*(Pbk(0,0) - Pkb(0,0) - P(0,0,0,0))", "2/5*(Pbk(0,0) + Pkb(0,0) - P(0,0,0,0))"},
        {"rad.ideal/ladder-left-series", "radial",
         R"([\arpm,\Pnkm{m}{+}{n}]=\sqrt{\frac{2}{5}}\left(\Pnkm{m}{+}{n\pm 1}-\Pnkm{m\mp 1}{+}{n}\right))", "e:sign m n", "",
         "[ar(e), Rl(1,m,n)]", "sqrt(2/5)*(Rl(1,m,n+e) - Rl(1,m-e,n))", ""},
        {"rad.ideal/ladder-right-series", "radial",
         R"([\arpm,\Pnkm{m}{n}{+}]=\sqrt{\frac{2}{5}}\left(\Pnkm{m}{n\pm 1}{+}-\Pnkm{m\mp 1}{n}{+}\right))", "e:sign m n", "",
         "[ar(e), Rr(1,m,n)]", "sqrt(2/5)*(Rr(1,m,n+e) - Rr(1,m-e,n))", ""},
        {"rad.ideal/left-left-series", "radial", R"([\Pnkm{k}{+}{l},\Pnkm{m}{+}{n}]=\Pnkm{m}{+}{l}-\Pnkm{k}{+}{n})",
         "k l m n", "", "[Rl(1,k,l), Rl(1,m,n)]", "Rl(1,m,l) - Rl(1,k,n)", "d(n,k)*Rl(1,m,l) - d(l,m)*Rl(1,k,n)"},
        {"rad.ideal/left-right-series", "radial",
         R"([\Pnkm{k}{+}{l},\Pnkm{m}{n}{+}]=\Pnkm{m,\,k-n+m}{n-k+l}{l}-\Pnkm{m-l+k,\,k}{n}{l-m+n})", "k l m n", "",
         "[Rl(1,k,l), Rr(1,m,n)]", "P(m,k-n+m,n-k+l,l) - P(m-l+k,k,n,l-m+n)",
         "d(n,k)*P(m,m,l,l) - d(l,m)*P(k,k,n,n)"},
        {"rad.ideal/right-right-series", "radial", R"([\Pnkm{k}{l}{+},\Pnkm{m}{n}{+}]=\Pnkm{m}{l}{+}-\Pnkm{k}{n}{+})",
         "k l m n", "", "[Rr(1,k,l), Rr(1,m,n)]", "Rr(1,m,l) - Rr(1,k,n)", "d(n,k)*Rr(1,m,l) - d(l,m)*Rr(1,k,n)"},

        // boundary oscillator, defining relations
        {"bnd.def/numbers-commute", "boundary", R"(\left[\mathbb{N}_1,\mathbb{N}_2\right]=0)", "", "", "[N1, N2]", "0", ""},
        {"bnd.def/number1-row", "boundary", R"([\mathbb{N}_1,\Pnkm{k,\,0}{m}{0}]=(m-k)\Pnkm{k,\,0}{m}{0})", "k m", "",
         "[N1, P(k,0,m,0)]", "(m-k)*P(k,0,m,0)", ""},
        {"bnd.def/number1-col", "boundary", R"([\mathbb{N}_1,\Pnkm{0,\,k}{0}{m}]=0)", "k m", "", "[N1, P(0,k,0,m)]", "0", ""},
        {"bnd.def/number1-row-col", "boundary", R"([\mathbb{N}_1,\Pnkm{k,\,0}{0}{n}]=-k\Pnkm{k,\,0}{0}{n})", "k n", "",
         "[N1, P(k,0,0,n)]", "-k*P(k,0,0,n)", ""},
        {"bnd.def/number1-col-row", "boundary", R"([\mathbb{N}_1,\Pnkm{0,\,l}{m}{0}]=m\Pnkm{0,\,l}{m}{0})", "l m", "",
         "[N1, P(0,l,m,0)]", "m*P(0,l,m,0)", ""},
        {"bnd.def/number2-row", "boundary", R"(\left[\mathbb{N}_2,\Pnkm{k,\,0}{m}{0}\right]=0)", "k m", "",
         "[N2, P(k,0,m,0)]", "0", ""},
        {"bnd.def/number2-col", "boundary", R"(\left[\mathbb{N}_2,\Pnkm{0,\,k}{0}{m}\right]=(m-k)\Pnkm{0,\,k}{0}{m})", "k m",
         "", "[N2, P(0,k,0,m)]", "(m-k)*P(0,k,0,m)", ""},
        {"bnd.def/number2-row-col", "boundary", R"(\left[\mathbb{N}_2,\Pnkm{k,\,0}{0}{n}\right]=n\Pnkm{k,\,0}{0}{n})", "k n",
         "", "[N2, P(k,0,0,n)]", "n*P(k,0,0,n)", ""},
        {"bnd.def/number2-col-row", "boundary", R"(\left[\mathbb{N}_2,\Pnkm{0,\,l}{m}{0}\right]=-l\Pnkm{0,\,l}{m}{0})", "l m",
         "", "[N2, P(0,l,m,0)]", "-l*P(0,l,m,0)", ""},
        {"bnd.def/row-row", "boundary",
         R"(\left[\Pnkm{k,\,0}{m}{0},\Pnkm{l,\,0}{n}{0}\right]&=\delta_{k,\,n}\Pnkm{l,\,0}{m}{0}-\delta_{m,\,l}\Pnkm{k,\,0}{n}{0})",
         "k m l n", "", "[P(k,0,m,0), P(l,0,n,0)]", "d(k,n)*P(l,0,m,0) - d(m,l)*P(k,0,n,0)", ""},
        {"bnd.def/row-col", "boundary",
         R"(\left[\Pnkm{k,\,0}{m}{0},\Pnkm{0,\,l}{0}{n}\right]&=\delta_{k,\,0}\delta_{n,\,0}\Pnkm{0,\,l}{m}{0})", "k m l n",
         "", "[P(k,0,m,0), P(0,l,0,n)]", "d(k,0)*d(n,0)*P(0,l,m,0) - d(m,0)*d(l,0)*P(k,0,0,n)", ""},
        {"bnd.def/row-rowcol", "boundary",
         R"(\left[\Pnkm{k,\,0}{m}{0},\Pnkm{l,\,0}{0}{n}\right]&=\delta_{k,\,0}\delta_{n,\,0}\Pnkm{l,\,0}{m}{0})", "k m l n",
         "", "[P(k,0,m,0), P(l,0,0,n)]", "d(k,0)*d(n,0)*P(l,0,m,0) - d(l,m)*P(k,0,0,n)", ""},
        {"bnd.def/row-colrow", "boundary",
         R"(\left[\Pnkm{k,\,0}{m}{0},\Pnkm{0,\,l}{n}{0}\right]&=\delta_{k,\,n}\Pnkm{0,\,l}{m}{0})", "k m l n", "",
         "[P(k,0,m,0), P(0,l,n,0)]", "d(k,n)*P(0,l,m,0) - d(m,0)*d(l,0)*P(k,0,n,0)", ""},
        {"bnd.def/col-col", "boundary",
         R"(\left[\Pnkm{0,\,k}{0}{m},\Pnkm{0,\,l}{0}{n}\right]&=\delta_{k,\,n}\Pnkm{0,\,l}{0}{m}-\delta_{m,\,l}\Pnkm{0,\,l}{0}{n})",
         "k m l n", "", "[P(0,k,0,m), P(0,l,0,n)]", "d(k,n)*P(0,l,0,m) - d(m,l)*P(0,l,0,n)",
         "d(k,n)*P(0,l,0,m) - d(m,l)*P(0,k,0,n)"},
        {"bnd.def/col-rowcol", "boundary",
         R"(\left[\Pnkm{0,\,k}{0}{m},\Pnkm{l,\,0}{0}{n}\right]&=\delta_{k,\,n}\Pnkm{l,\,0}{0}{m})", "k m l n", "",
         "[P(0,k,0,m), P(l,0,0,n)]", "d(k,n)*P(l,0,0,m) - d(m,0)*d(l,0)*P(0,k,0,n)", ""},
        {"bnd.def/col-colrow", "boundary",
         R"(\left[\Pnkm{0,\,k}{0}{m},\Pnkm{0,\,l}{n}{0}\right]&=\delta_{k,\,0}\delta_{n,\,0}\Pnkm{0,\,l}{0}{m})", "k m l n",
         "", "[P(0,k,0,m), P(0,l,n,0)]", "d(k,0)*d(n,0)*P(0,l,0,m) - d(l,m)*P(0,k,n,0)", ""},
        {"bnd.def/rowcol-colrow", "boundary",
         R"(\left[\Pnkm{k,\,0}{0}{n},\Pnkm{0,\,l}{m}{0}\right]&=\delta_{k,\,m}\Pnkm{0,\,l}{0}{n})", "k n l m", "",
         "[P(k,0,0,n), P(0,l,m,0)]", "d(k,m)*P(0,l,0,n) - d(l,n)*P(k,0,m,0)", ""},
        {"bnd.def/rowcol-rowcol", "boundary",
         R"(\left[\Pnkm{k,\,0}{0}{n},\Pnkm{l,\,0}{0}{m}\right]&=\delta_{k,\,0}\delta_{m,\,0}\Pnkm{l,\,0}{0}{n})", "k n l m",
         "", "[P(k,0,0,n), P(l,0,0,m)]", "d(k,0)*d(m,0)*P(l,0,0,n) - d(l,0)*d(n,0)*P(k,0,0,m)", ""},
        {"bnd.def/colrow-colrow", "boundary",
         R"(\left[\Pnkm{0,\,k}{n}{0},\Pnkm{0,\,l}{m}{0}\right]&=\delta_{k,\,0}\delta_{m,\,0}\Pnkm{0,\,l}{n}{0}-\delta_{l,\,0}\delta_{k,\,0}\Pnkm{0,\,k}{m}{0})",
         "k n l m", "", "[P(0,k,n,0), P(0,l,m,0)]", "d(k,0)*d(m,0)*P(0,l,n,0) - d(l,0)*d(k,0)*P(0,k,m,0)",
         "d(k,0)*d(m,0)*P(0,l,n,0) - d(l,0)*d(n,0)*P(0,k,m,0)"},

        // boundary ideal relations
        {"bnd.ideal/number1-row-ladder", "boundary", R"([\mathbb{N}_1,\acopm]=\pm \acopm)", "e:sign", "",
         "[N1, ab0(e)]", "e*ab0(e)", ""},
        {"bnd.ideal/number2-row-ladder", "boundary", R"([\mathbb{N}_2,\acopm]=0)", "e:sign", "", "[N2, ab0(e)]", "0", ""},
        {"bnd.ideal/row-ladder-bracket", "boundary", R"([\acop ,\acom]=-\Pnkm{0,\,0}{0}{0})", "", "",
         "[ab0(1), ab0(-1)]", "-P(0,0,0,0)", ""},
        {"bnd.ideal/row-unit-row-ladder", "boundary",
         R"([\Pnkm{k,\,0}{m}{0},\acopm]=\Pnkm{k\mp 1,\,0}{m}{0}-\Pnkm{k,\,0}{m\pm 1}{0})", "e:sign k m", "",
         "[P(k,0,m,0), ab0(e)]", "P(k-e,0,m,0) - P(k,0,m+e,0)", ""},
        {"bnd.ideal/col-unit-row-ladder", "boundary",
         R"([\Pnkm{0,\,k}{0}{m},\acopm]=\delta_{k,\,0}\Pnkm{\mp 1,\,0}{0}{m}-\delta_{m,\,0}\Pnkm{0,\,k}{\pm 1}{0})",
         "e:sign k m", "", "[P(0,k,0,m), ab0(e)]", "d(k,0)*P(-e,0,0,m) - d(m,0)*P(0,k,e,0)", ""},
        {"bnd.ideal/rowcol-unit-row-ladder", "boundary",
         R"([\Pnkm{k,\,0}{0}{m},\acopm]=\Pnkm{k\mp 1,\,0}{0}{m}-\delta_{m,\,0}\Pnkm{k,\,0}{\pm 1}{0})", "e:sign k m", "",
         "[P(k,0,0,m), ab0(e)]", "P(k-e,0,0,m) - d(m,0)*P(k,0,e,0)", ""},
        {"bnd.ideal/colrow-unit-row-ladder", "boundary",
         R"([\Pnkm{0,\,l}{n}{0},\acopm]=\delta_{l,\,0}\Pnkm{\mp 1,\,0}{n}{0}-\Pnkm{0,\,l}{n\pm 1}{0})", "e:sign l n", "",
         "[P(0,l,n,0), ab0(e)]", "d(l,0)*P(-e,0,n,0) - P(0,l,n+e,0)", ""},
        {"bnd.ideal/number1-col-ladder", "boundary", R"([\mathbb{N}_1,\aocpm]=0)", "e:sign", "", "[N1, a0b(e)]", "0", ""},
        {"bnd.ideal/number2-col-ladder", "boundary", R"([\mathbb{N}_2,\aocpm]=\pm \aocpm)", "e:sign", "",
         "[N2, a0b(e)]", "e*a0b(e)", ""},
        {"bnd.ideal/col-ladder-bracket", "boundary", R"([\aocp ,\aocm]=\Pnkm{0,\,0}{0}{0})", "", "", "[a0b(1), a0b(-1)]",
         "P(0,0,0,0)", "-P(0,0,0,0)"},
        {"bnd.ideal/row-unit-col-ladder", "boundary",
         R"([\Pnkm{k,\,0}{m}{0},\aocpm]=\delta_{k,\,0}\Pnkm{0,\,\mp 1}{m}{0}-\delta_{m,\,0}\Pnkm{k,\,0}{0}{\pm 1})",
         "e:sign k m", "", "[P(k,0,m,0), a0b(e)]", "d(k,0)*P(0,-e,m,0) - d(m,0)*P(k,0,0,e)", ""},
        {"bnd.ideal/col-unit-col-ladder", "boundary",
         R"([\Pnkm{0,\,k}{0}{m},\aocpm]=\Pnkm{0,\,k\mp 1,}{0}{m}-\Pnkm{0,\,k}{0}{m\pm 1})", "e:sign k m", "",
         "[P(0,k,0,m), a0b(e)]", "P(0,k-e,0,m) - P(0,k,0,m+e)", ""},
        {"bnd.ideal/rowcol-unit-col-ladder", "boundary",
         R"([\Pnkm{k,\,0}{0}{m},\aocpm]=\delta_{k,\,0}\Pnkm{0,\,\mp 1}{0}{m}-\Pnkm{k,\,0}{0}{m\pm 1})", "e:sign k m", "",
         "[P(k,0,0,m), a0b(e)]", "d(k,0)*P(0,-e,0,m) - P(k,0,0,m+e)", ""},
        {"bnd.ideal/colrow-unit-col-ladder", "boundary",
         R"([\Pnkm{0,\,l}{n}{0},\aocpm]=\Pnkm{0,\,l\mp 1}{n}{0}-\delta_{n,\,0}\Pnkm{0,\,l}{0}{\pm 1})", "e:sign l n", "",
         "[P(0,l,n,0), a0b(e)]", "P(0,l-e,n,0) - d(n,0)*P(0,l,0,e)", ""},
        {"bnd.ideal/row-col-raise", "boundary", R"([\acopm,\aocp]= \Pnkm{0,\,1}{\mp 1}{0})", "e:sign", "",
         "[ab0(e), a0b(1)]", "P(0,1,-e,0)", "-P(-e,0,0,1)"},
        {"bnd.ideal/row-col-lower", "boundary", R"([\acopm,\aocm]=-\Pnkm{\pm 1,\,0}{0}{1})", "e:sign", "",
         "[ab0(e), a0b(-1)]", "-P(e,0,0,1)", "P(0,1,e,0)"},

        // full algebra
        {"full/numbers-commute", "full", R"([\mathbb{N}_1,\mathbb{N}_2]=0)", "", "", "[N1, N2]", "0", ""},
        {"full/number1-sect-ladder", "full", R"([\mathbb{N}_1,\aspm]=\mp\aspm)", "e:sign", "", "[N1, as(e)]", "-e*as(e)",
         ""},
        {"full/number1-rad-ladder", "full", R"([\mathbb{N}_1,\arm]=\pm\arpm)", "e:sign", "", "[N1, ar(e)]", "e*ar(e)",
         ""},
        {"full/number1-left-hat", "full",
         R"([\mathbb{N}_1,\widehat{P}^{[k],\,l}_{[m],\,n}]=(m-k)\widehat{P}^{[k],\,l}_{[m],\,n})", "k l m n", "",
         "[N1, HL(k,l,m,n)]", "(m-k)*HL(k,l,m,n)", ""},
        {"full/number1-right-hat", "full",
         R"([\mathbb{N}_1,\widehat{P}^{k,\,[l]}_{m,\,[n]}]=(m-k)\widehat{P}^{k,\,[l]}_{m,\,[n]})", "k l m n", "",
         "[N1, HR(k,l,m,n)]", "(m-k)*HR(k,l,m,n)", ""},
        {"full/number1-unit", "full", R"([\mathbb{N}_1,\Pnkm{k,\,l}{n}{m}]=(n-k)\Pnkm{k,\,l}{n}{m})", "k l n m", "",
         "[N1, P(k,l,n,m)]", "(n-k)*P(k,l,n,m)", ""},
        {"full/number2-sect-ladder", "full", R"([\mathbb{N}_2,\aspm]=\pm\aspm)", "e:sign", "", "[N2, as(e)]", "e*as(e)", ""},
        {"full/number2-rad-ladder", "full", R"([\mathbb{N}_2,\arpm]=\pm\arpm)", "e:sign", "", "[N2, ar(e)]", "e*ar(e)", ""},
        {"full/number2-unit", "full", R"([\mathbb{N}_2,\Pnkm{k,\,l}{n}{m}]=(m-l)\Pnkm{k,\,l}{n}{m})", "k l n m", "",
         "[N2, P(k,l,n,m)]", "(m-l)*P(k,l,n,m)", ""},
        {"full/number2-left-hat", "full",
         R"(\left[\mathbb{N}_2,\widehat{P}^{[k],\,l}_{[m],\,n}\right]=(n-l)\widehat{P}^{[k],\,l}_{[m],\,n})", "k l m n", "",
         "[N2, HL(k,l,m,n)]", "(n-l)*HL(k,l,m,n)", ""},
        {"full/number2-right-hat", "full",
         R"(\left[\mathbb{N}_2,\widehat{P}^{k,\,[l]}_{m,\,[n]}\right]=(n-l)\widehat{P}^{k,\,[l]}_{m,\,[n]})", "k l m n", "",
         "[N2, HR(k,l,m,n)]", "(n-l)*HR(k,l,m,n)", ""},
        {"full/sect-ladder-bracket", "full",
         R"(\left[\asm,\asp\right]=\frac{1}{10}\left(\hPnkm{[0],\,0}{[0]}{0}-\hPnkm{0,\,[0]}{0}{[0]}\right))", "", "",
         "[as(-1), as(1)]", "1/10*(HL(0,0,0,0) - HR(0,0,0,0))", ""},
        {"full/sect-rad-same", "full", R"(\left[\aspm,\arpm\right]=\pm\frac{1}{5}\hPnkm{0,\,[\mp 1]}{0}{[\pm 1]})", "e:sign",
         "", "[as(e), ar(e)]", "e/5*HR(0,-e,0,e)", ""},
        {"full/sect-rad-opposite", "full", R"(\left[\asmp,\arpm\right]=\pm\frac{1}{5}\hPnkm{[\mp 1],\,0}{[\pm 1]}{0})",
         "e:sign", "", "[as(-e), ar(e)]", "e/5*HL(-e,0,e,0)", ""},
        {"full/sect-ladder-left-hat", "full",
         R"(\left[\aspm,\widehat{P}^{[k],\,l}_{[m],\,n}\right]=\frac{1}{\sqrt{10}}\left(\widehat{P}^{[k],\,l}_{[m\mp 1],\,n\pm 1}-\widehat{P}^{[k\pm 1],\,l\mp 1}_{[m],\,n}\right))",
         "e:sign k l m n", "", "[as(e), HL(k,l,m,n)]", "1/sqrt(10)*(HL(k,l,m-e,n+e) - HL(k+e,l-e,m,n))",
         "1/sqrt(10)*(HL(k,l,m-e,n+e) - HL(k+e,l-e,m,n) - d(e,-1)*P(k-m-1,l,0,n-1) + d(e,1)*P(0,l-1,m-k-1,n))"},
        {"full/sect-ladder-right-hat", "full",
         R"(\left[\aspm,\widehat{P}^{k,\,[l]}_{m,\,[n]}\right]=\frac{1}{\sqrt{10}}\left(\widehat{P}^{k,\,[l]}_{m\mp 1,\,[n\pm 1]}-\widehat{P}^{k\pm 1,\,[l\mp 1]}_{m,\,[n]}\right))",
         "e:sign k l m n", "", "[as(e), HR(k,l,m,n)]", "1/sqrt(10)*(HR(k,l,m-e,n+e) - HR(k+e,l-e,m,n))",
         "1/sqrt(10)*(HR(k,l,m-e,n+e) - HR(k+e,l-e,m,n) - d(e,1)*P(k,l-n-1,m-1,0) + d(e,-1)*P(k-1,0,m,n-l-1))"},
        {"full/sect-ladder-unit", "full",
         R"(\left[\asmp,\Pnkm{k,\,l}{m}{n}\right]=\frac{1}{\sqrt{10}}\left(\Pnkm{k,\,l}{m\pm 1}{n\mp 1}-\Pnkm{k\mp 1,\,l\pm 1}{m}{n}\right))",
         "e:sign k l m n", "", "[as(-e), P(k,l,m,n)]", "1/sqrt(10)*(P(k,l,m+e,n-e) - P(k-e,l+e,m,n))", ""},
        {"full/rad-ladder-bracket", "full",
         R"([\arm,\arp]=\frac{2}{5}\left(\hPnkm{[0],\,0}{[0]}{0}-\hPnkm{0,\,[0]}{0}{[0]}-P^{0,\,0}_{0,\,0}\right))", "", "",
         "[ar(-1), ar(1)]", "2/5*(HL(0,0,0,0) - HR(0,0,0,0) - P(0,0,0,0))",
         "2/5*(HL(0,0,0,0) + HR(0,0,0,0) - P(0,0,0,0))"},
        {"full/rad-ladder-left-hat", "full",
         R"(\left[\arpm,\widehat{P}^{[k],\,l}_{[m],\,n}\right]=\sqrt{\frac{2}{5}}\left(\widehat{P}^{[k],\,l}_{[m\pm 1],\,n\pm 1}-\widehat{P}^{[k\mp 1],\,l\mp 1}_{[m],\,n}\right))",
         "e:sign k l m n", "", "[ar(e), HL(k,l,m,n)]", "sqrt(2/5)*(HL(k,l,m+e,n+e) - HL(k-e,l-e,m,n))",
         "sqrt(2/5)*(HL(k,l,m+e,n+e) - HL(k-e,l-e,m,n) - d(e,1)*P(k-m-1,l,0,n+1) + d(e,-1)*P(0,l+1,m-k-1,n))"},
        {"full/rad-ladder-right-hat", "full",
         R"(\left[\arpm,\widehat{P}^{k,\,[l]}_{m,\,[n]}\right]=\sqrt{\frac{2}{5}}\left(\widehat{P}^{k,\,[l]}_{m\pm 1,\,[n\pm 1]}-\widehat{P}^{k\mp 1,\,[l\mp 1]}_{m,\,[n]}\right))",
         "e:sign k l m n", "", "[ar(e), HR(k,l,m,n)]", "sqrt(2/5)*(HR(k,l,m+e,n+e) - HR(k-e,l-e,m,n))",
         "sqrt(2/5)*(HR(k,l,m+e,n+e) - HR(k-e,l-e,m,n) - d(e,1)*P(k,l-n-1,m+1,0) + d(e,-1)*P(k+1,0,m,n-l-1))"},
        {"full/rad-ladder-unit", "full",
         R"(\left[\armp,\Pnkm{k,\,l}{m}{n}\right]=\sqrt{\frac{2}{5}}\left(\Pnkm{k,\,l}{m\mp 1}{n\mp 1}-\Pnkm{k\pm 1,\,l\pm 1}{m}{n}\right))",
         "e:sign k l m n", "", "[ar(-e), P(k,l,m,n)]", "sqrt(2/5)*(P(k,l,m-e,n-e) - P(k+e,l+e,m,n))", ""},
        {"full/left-left-hat", "full",
         R"(\left[\widehat{P}^{[k],\,l}_{[m],\,n},\widehat{P}^{[q],\,s}_{[u],\,v}\right]=\left(\widehat{P}^{[u+v-k-l-q],\,s}_{[m],\,n}-\widehat{P}^{[m+n-q-s-k],\,l}_{[u],\,v}\right))",
         "k l m n q s u v", "", "[HL(k,l,m,n), HL(q,s,u,v)]", "HL(u+v-k-l-q,s,m,n) - HL(m+n-q-s-k,l,u,v)",
         "d(v,l)*(HL(q,s,u+m-k,n) - sum(j, -q, -u-1, P(j+q,s,j+u+m-k,n))) - d(n,s)*(HL(k,l,m+u-q,v) - sum(j, -k, -m-1, P(j+k,l,j+m+u-q,v)))"},
        {"full/left-right-hat", "full",
         R"(\left[\widehat{P}^{[k],\,l}_{[m],\,n},\widehat{P}^{q,\,[s]}_{u,\,[v]}\right]=\left(P^{q,\,l-v+s}_{u-k+m,\,n}-P^{q-m+k,\,l}_{u,\,n-s+v}\right))",
         "k l m n q s u v", "", "[HL(k,l,m,n), HR(q,s,u,v)]", "P(q,l-v+s,u-k+m,n) - P(q-m+k,l,u,n-s+v)", ""},
        {"full/right-right-hat", "full",
         R"(\left[\widehat{P}^{k,\,[l]}_{m,\,[n]},\widehat{P}^{q,\,[s]}_{u,\,[v]}\right]=\left(\widehat{P}^{q,\,[-s-k-l+u+v]}_{m,\,[n]}-\widehat{P}^{k,\,[-l+m+n-q-s]}_{u,\,[v]}\right))",
         "k l m n q s u v", "", "[HR(k,l,m,n), HR(q,s,u,v)]", "HR(q,-s-k-l+u+v,m,n) - HR(k,-l+m+n-q-s,u,v)",
         "d(u,k)*(HR(q,s,m,v+n-l) - sum(j, -s, -v-1, P(q,j+s,m,j+v+n-l))) - d(m,q)*(HR(k,l,u,n+v-s) - sum(j, -l, -n-1, P(k,j+l,u,j+n+v-s)))"},
        {"full/left-hat-unit", "full",
         R"(\left[\widehat{P}^{[k],\,l}_{[m],\,n},P^{q,\,s}_{u,\,v}\right]=\left(P^{q,\,s}_{u+v+m-k-l,\,n}-P^{q+s+k-m-n,\,l}_{u,\,v}\right))",
         "k l m n q s u v", "", "[HL(k,l,m,n), P(q,s,u,v)]", "P(q,s,u+v+m-k-l,n) - P(q+s+k-m-n,l,u,v)",
         "d(v,l)*P(q,s,u+m-k,n) - d(n,s)*P(q+k-m,l,u,v)"},
        {"full/right-hat-unit", "full",
         R"(\left[\widehat{P}^{k,\,[l]}_{m,\,[n]},P^{q,\,s}_{u,\,v}\right]=\left(P^{q,\,s}_{m,\,u+v+n-k-l}-P^{k,\,q+s+l-m-n}_{u,\,v}\right))",
         "k l m n q s u v", "", "[HR(k,l,m,n), P(q,s,u,v)]", "P(q,s,m,u+v+n-k-l) - P(k,q+s+l-m-n,u,v)",
         "d(u,k)*P(q,s,m,v+n-l) - d(m,q)*P(k,s+l-n,u,v)"},
        {"full/unit-unit", "full",
         R"(\left[\Pnkm{k,\,l}{m}{n},\Pnkm{s,\,t}{u}{v}\right]=\delta_{k,\,u}\delta_{l,\,v}\Pnkm{s,\,t}{m}{n}-\delta_{m,\,s}\delta_{n,\,t}\Pnkm{k,\,l}{u}{v})",
         "k l m n s t u v", "", "[P(k,l,m,n), P(s,t,u,v)]", "d(k,u)*d(l,v)*P(s,t,m,n) - d(m,s)*d(n,t)*P(k,l,u,v)", ""},
    };
    return r;
}

}  // namespace chk
