"""Chebyshev coefficient tables for the Bessel evaluators.

Machine generated by tools/gen_coeffs.py -- do not edit by hand.
See that script for the definitions of the fitted functions.
"""

# first roots of J0 and J1, split into double-double pairs
J0_ROOT0_HI = 2.404825557695773
J0_ROOT0_LO = -1.176691651530894e-16
J0_ROOT1_HI = 5.520078110286311
J0_ROOT1_LO = 8.088597146146722e-17
J1_ROOT0_HI = 3.8317059702075125
J1_ROOT0_LO = -1.5269184090088067e-16

# series region (w = x^2 on [0, 25]), Chebyshev in u = 2w/25 - 1
J0_SMALL = (
    0.003433775195443006,
    -0.001974794511586004,
    0.0002472802343211527,
    -1.7951655945298798e-05,
    8.614299472476033e-07,
    -2.9521425632684864e-08,
    7.609233569353203e-10,
    -1.531306324653633e-11,
    2.475309497955091e-13,
    -3.2866707304697332e-15,
    3.6501313955036886e-17,
    -3.4418858692258494e-19,
    2.7906311139071592e-21,
)
J1_SMALL = (
    -0.018028415801166292,
    0.013661487082063361,
    -0.0021632651559238044,
    0.0001909490103660189,
    -1.0816174736957452e-05,
    4.278886056259686e-07,
    -1.251337564352681e-08,
    2.8183488843903415e-10,
    -5.042568567278396e-12,
    7.34347631506432e-14,
    -8.876744102278278e-16,
    9.051454724528835e-18,
    -7.891777052481785e-20,
)
Y0_SMALL = (
    0.20605257634092228,
    -0.13017522381095709,
    -0.291894720865317,
    0.10268287966073635,
    -0.014279159901781987,
    0.0011164629864165486,
    -5.677525113380376e-05,
    2.0406703657627165e-06,
    -5.476431029755533e-08,
    1.141220652090372e-09,
    -1.9021689490013906e-11,
    2.5954970583106197e-13,
    -2.9540707750193604e-15,
    2.848154182311252e-17,
    -2.356607585530683e-19,
)
Y1_SMALL = (
    0.0531074450560213,
    0.14189450894667655,
    -0.08834328868289824,
    0.017111109934210778,
    -0.0017057852565133666,
    0.000105257530278434,
    -4.44507526565354e-06,
    1.3699277670028168e-07,
    -3.222883768023259e-09,
    5.984534092223177e-11,
    -9.000965667133812e-13,
    1.1194186560306676e-14,
    -1.1707921590181557e-16,
    1.0444110354608508e-18,
)

# modulus/phase region (v = (5/x)^2 on (0, 1]), Chebyshev in u = 2v - 1
P0_ASYM = (
    0.9986523398776954,
    -0.00132937162125028,
    1.761305551290559e-05,
    -6.319367118733069e-07,
    3.948825587093808e-08,
    -3.5409678948019087e-09,
    4.103246366872386e-10,
    -5.765747662655223e-11,
    9.423105578391987e-12,
    -1.7401405706283885e-12,
    3.5557750052411783e-13,
    -7.914641501338115e-14,
    1.8959456362961828e-14,
    -4.841483019175697e-15,
    1.3078555195901338e-15,
    -3.714050821413154e-16,
    1.103023177871277e-16,
    -3.410936210498114e-17,
    1.0942187869810236e-17,
    -3.629905673795297e-18,
    1.2418028891673288e-18,
    -4.370539298294471e-19,
    1.5791690357401112e-19,
)
Q0_ASYM = (
    -0.024729405164334986,
    0.00026380388099845215,
    -6.43759824253235e-06,
    3.247418641128558e-07,
    -2.548657948406561e-08,
    2.7026065526268818e-09,
    -3.5701518102394104e-10,
    5.5817142695807205e-11,
    -9.977816055305666e-12,
    1.990142733561329e-12,
    -4.3502412086017667e-13,
    1.0280254324855211e-13,
    -2.5986485312118355e-14,
    6.967527155377957e-15,
    -1.9680115145087463e-15,
    5.8230549837184e-16,
    -1.7964302342606689e-16,
    5.755537813115849e-17,
    -1.9085810023462685e-17,
    6.5316323887296735e-18,
    -2.301036357065232e-18,
    8.32640853075718e-19,
    -3.0887382878007324e-19,
    1.1725918471038356e-19,
    -4.548728447650107e-20,
    1.8005923903470023e-20,
    -7.264203320056797e-21,
    2.9834901335913247e-21,
)
P1_ASYM = (
    1.00226762068534,
    0.0022437352958079985,
    -2.3071018862548286e-05,
    7.639181732533905e-07,
    -4.589685232343401e-08,
    4.020515478419001e-09,
    -4.586773977170972e-10,
    6.373158962859246e-11,
    -1.0327344567640412e-11,
    1.8943274995111034e-12,
    -3.849703387824105e-13,
    8.529914525779044e-14,
    -2.03544697865723e-14,
    5.180421738900549e-15,
    -1.3953502148258493e-15,
    3.9523601713314257e-16,
    -1.171117080126803e-16,
    3.614078564738109e-17,
    -1.1572356053251518e-17,
    3.832473906744907e-18,
    -1.3090769675043101e-18,
    4.6007673630742315e-19,
    -1.6601747965114712e-19,
)
Q1_ASYM = (
    0.07461746924293727,
    -0.00037410379362102955,
    8.01139890409206e-06,
    -3.828805678171264e-07,
    2.917633021484398e-08,
    -3.036679728934633e-09,
    3.9598445211790335e-10,
    -6.131962898875392e-11,
    1.0880467184119506e-11,
    -2.1573304385076937e-12,
    4.692705663517787e-13,
    -1.1044093713083652e-13,
    2.781945696278766e-14,
    -7.436303350432923e-15,
    2.0948126235658333e-15,
    -6.183568405835825e-16,
    1.9036103662163e-16,
    -6.087290133410104e-17,
    2.0150975159994986e-17,
    -6.885261323962649e-18,
    2.4221007940443373e-18,
    -8.752777804856654e-19,
    3.2428888011494625e-19,
    -1.2296988297217244e-19,
    4.765151605515998e-20,
    -1.884374255367176e-20,
    7.595071564943416e-21,
)
