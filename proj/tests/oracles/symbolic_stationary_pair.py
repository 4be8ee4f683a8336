# Symbolic oracle: F^beta_lm F^alpha_ln F^gamma_mn g(alpha,beta,gamma) with F^x = -lap d_ij + d_i d_j
# Run from this directory: python3 symbolic_stationary_pair.py
# acting on radial variable x; radial form F^x g = -delta (g'' + g'/x) + xx (g'' - g'/x).
import sympy as sp, itertools
a,b,c=sp.symbols('a b c',positive=True)
def L(g,x,kind):
    if kind==0: return -(sp.diff(g,x,2)+sp.diff(g,x)/x)
    return sp.diff(g,x,2)-sp.diff(g,x)/x
def fff(g, na, nb, nc):
    # na,nb,nc: unit vectors (sympy Matrices) along alpha(B-C), beta(A-C), gamma(A-B)
    I=sp.eye(3)
    T={0:I}
    tot=0
    for kb,ka,kc in itertools.product((0,1),repeat=3):
        Tb = I if kb==0 else nb*nb.T
        Ta = I if ka==0 else na*na.T
        Tc = I if kc==0 else nc*nc.T
        tr=(Tb*Ta*Tc).trace()   # sum_lmn Tb_lm Ta_ln Tc_mn = Tr(Tb^T Ta Tc^T)... all symmetric
        d=L(L(L(g,b,kb),a,ka),c,kc)
        tot+= tr*d
    return tot
def geom(A,B,C):
    A,B,C=[sp.Matrix(v) for v in (A,B,C)]
    ra=B-C; rb=A-C; rc=A-B
    al=sp.sqrt(ra.dot(ra)); be=sp.sqrt(rb.dot(rb)); ga=sp.sqrt(rc.dot(rc))
    return (al,be,ga),(ra/al, rb/be, rc/ga)
def evalg(g,A,B,C):
    (al,be,ga),(na,nb,nc)=geom(A,B,C)
    expr=fff(g,na,nb,nc)
    return sp.N(expr.subs({a:al,b:be,c:ga}),25), (al,be,ga)
S=sp.Rational
def pos_from_dists(al,be,ga):
    x=(be**2-al**2+ga**2)/(2*ga); y=sp.sqrt(be**2-x**2)
    return (0,0,0),(ga,0,0),(x,y,0)
print("== static (stationary) -(1/pi) FFF[1/((a+b+c)abc)]")
gs=1/((a+b+c)*a*b*c)
for A,B,C in [((0,0,0),(1,0,0),(S(1,2),sp.sqrt(3)/2,0)), ((0,0,0),(3,0,0),(3,4,0)),
              ((S(1,10),S(2,10),0),(S(13,10),S(-4,10),S(5,10)),(S(2,10),S(11,10),S(-3,10)))]:
    v,d=evalg(gs,A,B,C); print([sp.N(x,8) for x in d], sp.N(-v/sp.pi,20))
print("== pair energy: -(1/16pi)[ga_open*(F g1 + F g2) + gb_open*(F g3 + F g2)], gates 0/1/2")
g1=1/((b-a+c)*a*b*c); g2=1/((a+b-c)*a*b*c); g3=1/((a-b+c)*a*b*c)
for (al,be,ga,ct) in [(S(5,2),S(16,5),1,2),(S(5,2),S(14,5),1,2)]:
    A,B,C=pos_from_dists(al,be,ga)
    v1,_=evalg(g1,A,B,C); v2,_=evalg(g2,A,B,C); v3,_=evalg(g3,A,B,C)
    gate=lambda x: 1-sp.sign(x)
    Ga=gate(al-ga-ct); Gb=gate(be-ga-ct)
    E=-(Ga*(v1+v2)+Gb*(v3+v2))/(16*sp.pi)
    print(al,be,ga,ct,"gates",Ga,Gb,"C=",[sp.N(t,20) for t in C], "E=",sp.N(E,20))
