"""Seashell Strewing generator (Scattering)."""

PARAMS = {
    "size": 1.222,
    "detail": 5,
    "roughness": 0.387,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Seashell Strewing"
    for key, value in params.items():
        node[key] = value
    return node
