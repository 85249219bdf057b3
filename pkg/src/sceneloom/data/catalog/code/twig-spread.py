"""Twig Spread generator (Scattering)."""

PARAMS = {
    "size": 3.181,
    "detail": 1,
    "roughness": 0.817,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Twig Spread"
    for key, value in params.items():
        node[key] = value
    return node
