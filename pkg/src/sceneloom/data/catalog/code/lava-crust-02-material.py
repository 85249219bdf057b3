"""Lava Crust 02 Material generator (Materials)."""

PARAMS = {
    "size": 3.263,
    "detail": 2,
    "roughness": 0.299,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
