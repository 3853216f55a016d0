"""Planted corpus file: exactly one instance of each smell rule."""

alpha = load_alpha()
beta = load_beta()
gamma = alpha + beta

def choose(flag):
    if flag:
        return 10
    else:
        return 20

def cleanup():
    return 0
    leftover = 1

def ping(a):
    value = 1

def ping(a):
    value = 2

def wide(p1, p2, p3, p4, p5, p6):
    total = 0

total_line = w01 + w02 + w03 + w04 + w05 + w06 + w07 + w08 + w09 + w10

class Jumbo:
    a01 = 1
    a02 = 2
    a03 = 3
    a04 = 4
    a05 = 5
    a06 = 6
    a07 = 7
    a08 = 8
    a09 = 9
    a10 = 10
    a11 = 11
    a12 = 12
    a13 = 13
    a14 = 14
    a15 = 15
    a16 = 16
    a17 = 17
    a18 = 18
    a19 = 19
    a20 = 20
    a21 = 21
    a22 = 22
    a23 = 23
    a24 = 24
    a25 = 25
    a26 = 26
    a27 = 27
    a28 = 28
    a29 = 29
    a30 = 30
    a31 = 31
    a32 = 32
    a33 = 33
    a34 = 34
    a35 = 35
    a36 = 36
    a37 = 37
    a38 = 38
    a39 = 39
    a40 = 40
    a41 = 41
    a42 = 42
    a43 = 43
    a44 = 44
    a45 = 45
    a46 = 46
    a47 = 47
    a48 = 48
    a49 = 49
    a50 = 50
    a51 = 51
    a52 = 52
    a53 = 53
    a54 = 54
    a55 = 55
    a56 = 56
    a57 = 57
    a58 = 58
    a59 = 59
    a60 = 60
    a61 = 61

if enabled:
    c01 = 1
    c02 = 2
    c03 = 3
    c04 = 4
    c05 = 5
    c06 = 6
    c07 = 7
    c08 = 8
    c09 = 9
    c10 = 10
    c11 = 11

alpha = load_alpha()
beta = load_beta()
gamma = alpha + beta
