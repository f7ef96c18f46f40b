"""
Coefficient table of the degree-12 structure function for realizations with beta != 0.

Each entry maps a power of the shifted number operator t = N + u to its
coefficient, a polynomial in the structure constants (lambda spelled "lam")
and the Casimir value K.
The table is normalized against rho^2(N-1) = 1 / (3932160 beta^10 t (t-1) (2t-1)^2).
"""

CASE2_NORMALIZATION = 3932160

CASE2_COEFFICIENTS = {
    0: (
        "- 983040*K*beta**8 + 8640*alpha**2*beta**10 - 46080*alpha*beta**9*gamma"
        " - 184320*beta**8*gamma**2 + 46080*alpha**2*beta**8*delta"
        " + 61440*alpha*beta**7*gamma*delta - 491520*beta**6*gamma**2*delta"
        " - 30720*alpha**2*beta**6*delta**2 + 737280*alpha*beta**5*gamma*delta**2"
        " + 983040*beta**4*gamma**2*delta**2 - 245760*alpha**2*beta**4*delta**3"
        " - 983040*alpha*beta**3*gamma*delta**3 + 245760*alpha**2*beta**2*delta**4"
        " - 368640*alpha*beta**8*epsilon + 983040*beta**7*gamma*epsilon"
        " - 983040*alpha*beta**6*delta*epsilon - 3932160*beta**5*gamma*delta*epsilon"
        " + 1966080*alpha*beta**4*delta**2*epsilon + 3932160*beta**6*epsilon**2"
        " + 245760*beta**9*zeta - 983040*beta**7*delta*zeta - 3204*beta**13*lam"
        " - 10608*beta**11*delta*lam + 3968*beta**9*delta**2*lam"
        " - 50688*beta**7*delta**3*lam - 128000*beta**5*delta**4*lam"
        " - 12288*beta**3*delta**5*lam - 4680*beta**12*mu - 17280*beta**10*delta*mu"
        " + 6400*beta**8*delta**2*mu + 10240*beta**6*delta**3*mu"
        " + 30720*beta**4*delta**4*mu + 11520*beta**11*nu + 46080*beta**9*delta*nu"
        " - 20480*beta**7*delta**2*nu - 81920*beta**5*delta**3*nu - 46080*beta**10*xi"
        " - 122880*beta**8*delta*xi + 245760*beta**6*delta**2*xi"
        " - 15120*alpha*beta**11*tau + 40320*beta**10*gamma*tau"
        " - 66240*alpha*beta**9*delta*tau + 153600*beta**8*gamma*delta*tau"
        " - 23040*alpha*beta**7*delta**2*tau - 184320*beta**6*gamma*delta**2*tau"
        " + 92160*alpha*beta**5*delta**3*tau - 491520*beta**4*gamma*delta**3*tau"
        " + 307200*alpha*beta**3*delta**4*tau + 491520*beta**2*gamma*delta**4*tau"
        " - 245760*alpha*beta*delta**5*tau + 322560*beta**9*epsilon*tau"
        " + 552960*beta**7*delta*epsilon*tau + 737280*beta**5*delta**2*epsilon*tau"
        " - 983040*beta**3*delta**3*epsilon*tau + 5535*beta**12*tau**2"
        " + 5400*beta**10*delta*tau**2 - 115440*beta**8*delta**2*tau**2"
        " - 264960*beta**6*delta**3*tau**2 - 311040*beta**4*delta**4*tau**2"
        " - 92160*beta**2*delta**5*tau**2 + 61440*delta**6*tau**2"
    ),
    1: (
        "3932160*K*beta**8 - 46080*alpha**2*beta**10 + 307200*alpha*beta**9*gamma"
        " + 491520*beta**8*gamma**2 - 307200*alpha**2*beta**8*delta"
        " + 491520*alpha*beta**7*gamma*delta + 1966080*beta**6*gamma**2*delta"
        " - 245760*alpha**2*beta**6*delta**2 - 2949120*alpha*beta**5*gamma*delta**2"
        " + 983040*alpha**2*beta**4*delta**3 + 983040*alpha*beta**8*epsilon"
        " - 3932160*beta**7*gamma*epsilon + 3932160*alpha*beta**6*delta*epsilon"
        " - 1966080*beta**9*zeta + 3932160*beta**7*delta*zeta + 12576*beta**13*lam"
        " + 38592*beta**11*delta*lam - 38912*beta**9*delta**2*lam"
        " + 141312*beta**7*delta**3*lam + 450560*beta**5*delta**4*lam"
        " + 49152*beta**3*delta**5*lam + 20640*beta**12*mu + 92160*beta**10*delta*mu"
        " + 66560*beta**8*delta**2*mu + 81920*beta**6*delta**3*mu"
        " - 122880*beta**4*delta**4*mu - 61440*beta**11*nu - 307200*beta**9*delta*nu"
        " - 163840*beta**7*delta**2*nu + 327680*beta**5*delta**3*nu + 307200*beta**10*xi"
        " + 983040*beta**8*delta*xi - 983040*beta**6*delta**2*xi"
        " + 72000*alpha*beta**11*tau - 245760*beta**10*gamma*tau"
        " + 384000*alpha*beta**9*delta*tau - 1105920*beta**8*gamma*delta*tau"
        " + 522240*alpha*beta**7*delta**2*tau + 245760*alpha*beta**5*delta**3*tau"
        " + 1966080*beta**4*gamma*delta**3*tau - 1228800*alpha*beta**3*delta**4*tau"
        " - 675840*beta**9*epsilon*tau - 1474560*beta**7*delta*epsilon*tau"
        " - 2949120*beta**5*delta**2*epsilon*tau - 23400*beta**12*tau**2"
        " - 38880*beta**10*delta*tau**2 + 372480*beta**8*delta**2*tau**2"
        " + 844800*beta**6*delta**3*tau**2 + 1013760*beta**4*delta**4*tau**2"
        " + 368640*beta**2*delta**5*tau**2"
    ),
    2: (
        "- 3932160*K*beta**8 + 15360*alpha**2*beta**10 - 552960*alpha*beta**9*gamma"
        " + 491520*beta**8*gamma**2 + 552960*alpha**2*beta**8*delta"
        " - 3440640*alpha*beta**7*gamma*delta - 1966080*beta**6*gamma**2*delta"
        " + 1720320*alpha**2*beta**6*delta**2 + 2949120*alpha*beta**5*gamma*delta**2"
        " - 983040*alpha**2*beta**4*delta**3 + 983040*alpha*beta**8*epsilon"
        " + 3932160*beta**7*gamma*epsilon - 3932160*alpha*beta**6*delta*epsilon"
        " + 5898240*beta**9*zeta - 3932160*beta**7*delta*zeta + 18976*beta**13*lam"
        " + 72512*beta**11*delta*lam + 346112*beta**9*delta**2*lam"
        " + 473088*beta**7*delta**3*lam - 204800*beta**5*delta**4*lam"
        " - 49152*beta**3*delta**5*lam + 19040*beta**12*mu - 30720*beta**10*delta*mu"
        " - 250880*beta**8*delta**2*mu - 573440*beta**6*delta**3*mu"
        " + 122880*beta**4*delta**4*mu + 20480*beta**11*nu + 552960*beta**9*delta*nu"
        " + 1146880*beta**7*delta**2*nu - 327680*beta**5*delta**3*nu - 552960*beta**10*xi"
        " - 2949120*beta**8*delta*xi + 983040*beta**6*delta**2*xi"
        " + 27840*alpha*beta**11*tau + 307200*beta**10*gamma*tau"
        " - 353280*alpha*beta**9*delta*tau + 2580480*beta**8*gamma*delta*tau"
        " - 1628160*alpha*beta**7*delta**2*tau + 2949120*beta**6*gamma*delta**2*tau"
        " - 2703360*alpha*beta**5*delta**3*tau - 1966080*beta**4*gamma*delta**3*tau"
        " + 1228800*alpha*beta**3*delta**4*tau - 1536000*beta**9*epsilon*tau"
        " - 1474560*beta**7*delta*epsilon*tau + 2949120*beta**5*delta**2*epsilon*tau"
        " - 21000*beta**12*tau**2 + 96480*beta**10*delta*tau**2"
        " + 433920*beta**8*delta**2*tau**2 + 814080*beta**6*delta**3*tau**2"
        " - 92160*beta**4*delta**4*tau**2 - 368640*beta**2*delta**5*tau**2"
    ),
    3: (
        "307200*alpha**2*beta**10 - 491520*alpha*beta**9*gamma - 1966080*beta**8*gamma**2"
        " + 491520*alpha**2*beta**8*delta + 5898240*alpha*beta**7*gamma*delta"
        " - 2949120*alpha**2*beta**6*delta**2 - 3932160*alpha*beta**8*epsilon"
        " - 7864320*beta**9*zeta - 120448*beta**13*lam - 367616*beta**11*delta*lam"
        " - 860160*beta**9*delta**2*lam - 1720320*beta**7*delta**3*lam"
        " - 491520*beta**5*delta**4*lam - 197120*beta**12*mu"
        " - 614400*beta**10*delta*mu - 368640*beta**8*delta**2*mu"
        " + 983040*beta**6*delta**3*mu + 409600*beta**11*nu + 491520*beta**9*delta*nu"
        " - 1966080*beta**7*delta**2*nu - 491520*beta**10*xi + 3932160*beta**8*delta*xi"
        " - 599040*alpha*beta**11*tau + 860160*beta**10*gamma*tau"
        " - 1781760*alpha*beta**9*delta*tau - 983040*beta**8*gamma*delta*tau"
        " - 245760*alpha*beta**7*delta**2*tau - 5898240*beta**6*gamma*delta**2*tau"
        " + 4915200*alpha*beta**5*delta**3*tau + 3440640*beta**9*epsilon*tau"
        " + 5898240*beta**7*delta*epsilon*tau + 204000*beta**12*tau**2"
        " + 69120*beta**10*delta*tau**2 - 1981440*beta**8*delta**2*tau**2"
        " - 4300800*beta**6*delta**3*tau**2 - 1843200*beta**4*delta**4*tau**2"
    ),
    4: (
        "- 522240*alpha**2*beta**10 + 2703360*alpha*beta**9*gamma"
        " + 983040*beta**8*gamma**2 - 2703360*alpha**2*beta**8*delta"
        " - 2949120*alpha*beta**7*gamma*delta + 1474560*alpha**2*beta**6*delta**2"
        " + 1966080*alpha*beta**8*epsilon + 3932160*beta**9*zeta + 12608*beta**13*lam"
        " - 77312*beta**11*delta*lam - 307200*beta**9*delta**2*lam"
        " + 614400*beta**7*delta**3*lam + 245760*beta**5*delta**4*lam"
        " + 136960*beta**12*mu + 1044480*beta**10*delta*mu + 2027520*beta**8*delta**2*mu"
        " - 491520*beta**6*delta**3*mu - 696320*beta**11*nu - 2703360*beta**9*delta*nu"
        " + 983040*beta**7*delta**2*nu + 2703360*beta**10*xi - 1966080*beta**8*delta*xi"
        " + 622080*alpha*beta**11*tau - 2396160*beta**10*gamma*tau"
        " + 3962880*alpha*beta**9*delta*tau - 4423680*beta**8*gamma*delta*tau"
        " + 6266880*alpha*beta**7*delta**2*tau + 2949120*beta**6*gamma*delta**2*tau"
        " - 2457600*alpha*beta**5*delta**3*tau + 737280*beta**9*epsilon*tau"
        " - 2949120*beta**7*delta*epsilon*tau - 150000*beta**12*tau**2"
        " - 933120*beta**10*delta*tau**2 - 1313280*beta**8*delta**2*tau**2"
        " + 1290240*beta**6*delta**3*tau**2 + 921600*beta**4*delta**4*tau**2"
    ),
    5: (
        "- 245760*alpha**2*beta**10 - 2949120*alpha*beta**9*gamma"
        " + 2949120*alpha**2*beta**8*delta + 373760*beta**13*lam"
        " + 1165312*beta**11*delta*lam + 2457600*beta**9*delta**2*lam"
        " + 1474560*beta**7*delta**3*lam + 547840*beta**12*mu"
        " + 491520*beta**10*delta*mu - 2211840*beta**8*delta**2*mu - 327680*beta**11*nu"
        " + 2949120*beta**9*delta*nu - 2949120*beta**10*xi + 1259520*alpha*beta**11*tau"
        " + 983040*beta**10*gamma*tau - 245760*alpha*beta**9*delta*tau"
        " + 5898240*beta**8*gamma*delta*tau - 7372800*alpha*beta**7*delta**2*tau"
        " - 2949120*beta**9*epsilon*tau - 441600*beta**12*tau**2"
        " + 1428480*beta**10*delta*tau**2 + 6819840*beta**8*delta**2*tau**2"
        " + 3686400*beta**6*delta**3*tau**2"
    ),
    6: (
        "1228800*alpha**2*beta**10 + 983040*alpha*beta**9*gamma"
        " - 983040*alpha**2*beta**8*delta - 185344*beta**13*lam"
        " - 161792*beta**11*delta*lam - 491520*beta**9*delta**2*lam"
        " - 491520*beta**7*delta**3*lam - 803840*beta**12*mu"
        " - 2457600*beta**10*delta*mu + 737280*beta**8*delta**2*mu + 1638400*beta**11*nu"
        " - 983040*beta**9*delta*nu + 983040*beta**10*xi - 2426880*alpha*beta**11*tau"
        " + 1966080*beta**10*gamma*tau - 5652480*alpha*beta**9*delta*tau"
        " - 1966080*beta**8*gamma*delta*tau + 2457600*alpha*beta**7*delta**2*tau"
        " + 983040*beta**9*epsilon*tau + 764160*beta**12*tau**2"
        " + 1428480*beta**10*delta*tau**2 - 2396160*beta**8*delta**2*tau**2"
        " - 1228800*beta**6*delta**3*tau**2"
    ),
    7: (
        "- 983040*alpha**2*beta**10 - 446464*beta**13*lam"
        " - 1556480*beta**11*delta*lam - 1966080*beta**9*delta**2*lam"
        " - 204800*beta**12*mu + 1966080*beta**10*delta*mu - 1310720*beta**11*nu"
        " + 245760*alpha*beta**11*tau - 1966080*beta**10*gamma*tau"
        " + 4915200*alpha*beta**9*delta*tau - 291840*beta**12*tau**2"
        " - 4792320*beta**10*delta*tau**2 - 3686400*beta**8*delta**2*tau**2"
    ),
    8: (
        "245760*alpha**2*beta**10 + 123904*beta**13*lam + 20480*beta**11*delta*lam"
        " + 491520*beta**9*delta**2*lam + 972800*beta**12*mu"
        " - 491520*beta**10*delta*mu + 327680*beta**11*nu + 1781760*alpha*beta**11*tau"
        " + 491520*beta**10*gamma*tau - 1228800*alpha*beta**9*delta*tau"
        " - 618240*beta**12*tau**2 + 1751040*beta**10*delta*tau**2"
        " + 921600*beta**8*delta**2*tau**2"
    ),
    9: (
        "368640*beta**13*lam + 1228800*beta**11*delta*lam - 614400*beta**12*mu"
        " - 1228800*alpha*beta**11*tau + 1259520*beta**12*tau**2"
        " + 1843200*beta**10*delta*tau**2"
    ),
    10: (
        "73728*beta**13*lam - 245760*beta**11*delta*lam + 122880*beta**12*mu"
        " + 245760*alpha*beta**11*tau - 460800*beta**12*tau**2"
        " - 368640*beta**10*delta*tau**2"
    ),
    11: (
        "- 294912*beta**13*lam - 368640*beta**12*tau**2"
    ),
    12: (
        "49152*beta**13*lam + 61440*beta**12*tau**2"
    ),
}
