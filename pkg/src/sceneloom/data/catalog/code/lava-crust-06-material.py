"""Lava Crust 06 Material generator (Materials)."""

PARAMS = {
    "size": 0.268,
    "detail": 2,
    "roughness": 0.42,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
