"""River Silt 10 Material generator (Materials)."""

PARAMS = {
    "size": 1.08,
    "detail": 4,
    "roughness": 0.586,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
