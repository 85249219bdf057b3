"""River Silt 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.722,
    "detail": 1,
    "roughness": 0.865,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
