"""Seaweed Wrack generator (Scattering)."""

PARAMS = {
    "size": 1.582,
    "detail": 4,
    "roughness": 0.785,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Seaweed Wrack"
    for key, value in params.items():
        node[key] = value
    return node
